"""Property (P) for a list of composition-factor summaries.

Input files hold one factor per line::

    # dim  mult  h1  h1_dual  trivial
    1      5     0   0        yes
    6      3     1   1        no

Fields may be separated by whitespace or commas.  A header line starting with
``dim`` and comment lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

HOLDS = "holds"
FAILS_A = "fails(a)"
FAILS_B = "fails(b)"


class FactorFormatError(ValueError):
    pass


@dataclass(frozen=True)
class FactorSummary:
    dim: int
    multiplicity: int
    h1: int
    h1_dual: int
    is_trivial: bool = False
    self_dual: bool = False
    name: str = ""

    def __post_init__(self):
        if self.dim < 1 or self.multiplicity < 1:
            raise ValueError("dim and multiplicity must be positive")
        if self.h1 < 0 or self.h1_dual < 0:
            raise ValueError("H^1 dimensions must be nonnegative")
        if self.is_trivial and self.dim != 1:
            raise ValueError("a trivial factor has dimension 1")
        if self.self_dual and self.h1 != self.h1_dual:
            raise ValueError("a self-dual factor has h1 == h1_dual")


@dataclass(frozen=True)
class PropertyPResult:
    verdict: str
    m: int
    S: int

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS


def has_property_P(factors) -> PropertyPResult:
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one composition factor")
    m = sum(f.multiplicity for f in factors if f.is_trivial)
    S = sum(f.multiplicity * f.h1 for f in factors)
    if S < m:
        return PropertyPResult(FAILS_A, m, S)
    if S > m:
        return PropertyPResult(HOLDS, m, S)
    asym = any((f.h1 == 0) != (f.h1_dual == 0) for f in factors)
    return PropertyPResult(HOLDS if asym else FAILS_B, m, S)


_TRUE = {"1", "y", "yes", "true", "t", "trivial"}
_FALSE = {"0", "n", "no", "false", "f", "-"}


def _flag(tok: str, lineno: int) -> bool:
    t = tok.lower()
    if t in _TRUE:
        return True
    if t in _FALSE:
        return False
    raise FactorFormatError(f"line {lineno}: bad boolean {tok!r}")


def parse_factors(text: str) -> list[FactorSummary]:
    """Parse records ``dim mult h1 h1_dual trivial [self_dual] [name]``."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = [t for t in re.split(r"[,\s]+", line) if t]
        if toks[0].lower() == "dim":
            continue
        if len(toks) < 5:
            raise FactorFormatError(f"line {lineno}: expected at least 5 fields")
        try:
            dim, mult, h1, h1d = (int(t) for t in toks[:4])
        except ValueError as e:
            raise FactorFormatError(f"line {lineno}: {e}") from None
        triv = _flag(toks[4], lineno)
        sd = _flag(toks[5], lineno) if len(toks) > 5 else False
        name = " ".join(toks[6:])
        try:
            out.append(FactorSummary(dim, mult, h1, h1d, triv, sd, name))
        except ValueError as e:
            raise FactorFormatError(f"line {lineno}: {e}") from None
    if not out:
        raise FactorFormatError("no factor records")
    return out


def format_factors(factors) -> str:
    lines = ["# dim mult h1 h1_dual trivial self_dual name"]
    for f in factors:
        lines.append(" ".join(str(v) for v in (
            f.dim, f.multiplicity, f.h1, f.h1_dual,
            "yes" if f.is_trivial else "no", "yes" if f.self_dual else "no", f.name)).rstrip())
    return "\n".join(lines) + "\n"
