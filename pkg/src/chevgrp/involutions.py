"""Involutions: order checks, Jordan data, class identification, symmetries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chevbasis import GeneratorWord, Token, parse_word
from .exact import QQ, ExactMatrix, check_ring
from .rootsys import build_root_system, dynkin_symmetry
from .tables import ClassRecord, JordanType, class_records, parity_of
from .weylmod import build_module

IDENTITY = "identity"
INVOLUTION = "involution"
ORDER4 = "order-4-central-square"
NEITHER = "neither"

FAITHFUL = {"E6": "vmin", "E7": "vmin"}


class NotAnInvolution(ValueError):
    """Raised when an element fails the involution precondition."""


class NoMatchingClass(LookupError):
    pass


@dataclass(frozen=True)
class EigenSplit:
    """Eigenspace dimensions of a semisimple involution (p odd)."""

    plus: int
    minus: int

    @property
    def fixed_dim(self) -> int:
        return self.plus


def _group(group: str) -> str:
    return build_root_system(group).name


def _ring_for(p: int) -> int:
    return check_ring(p)


def _word(w) -> GeneratorWord:
    return parse_word(w) if isinstance(w, str) else w


def faithful_module(group: str) -> str:
    return FAITHFUL.get(_group(group), "adjoint")


def order_status(g: ExactMatrix) -> str:
    """Classify ``g`` as identity, involution, order-4 with central square, or neither."""
    if g.is_identity():
        return IDENTITY
    g2 = g @ g
    if g2.is_identity():
        return INVOLUTION
    c = g2.scalar_value()
    if c is not None:
        if (g2 @ g2).is_identity():
            return ORDER4
        # a scalar square of order 3 (cube roots of unity for E6)
        if (g2 @ g2 @ g2).is_identity():
            return NEITHER
    raise NotAnInvolution("element does not have 2-power order at most 4 modulo scalars")


def is_involution_mod_center(group: str, word, p: int = QQ) -> str:
    """Order status of ``word`` on the faithful module (V_min for E6, E7)."""
    group = _group(group)
    m = build_module(group, faithful_module(group), _ring_for(p))
    return order_status(m.evaluate(_word(word)))


def jordan_partition(g: ExactMatrix, p: int | None = None):
    """Jordan type at p = 2; eigenspace split at p odd or over Q."""
    p = g.ring if p is None else p
    if not (g @ g).is_identity():
        raise NotAnInvolution("g^2 != 1 on the module")
    n = g.nrows
    I = ExactMatrix.identity(n, g.ring)
    if p == 2:
        return JordanType.involution(n, (g - I).rank())
    plus = n - (g - I).rank()
    return EigenSplit(plus, n - plus)


def _matches(rec_data, jordan_or_fixed) -> bool:
    if rec_data is None:
        return True
    if isinstance(rec_data, JordanType):
        return rec_data == jordan_or_fixed
    if isinstance(rec_data, tuple):
        return jordan_or_fixed in rec_data
    return rec_data == jordan_or_fixed


def _invariant(g: ExactMatrix, p: int):
    if p == 2:
        return jordan_partition(g, 2)
    return g.fixed_dim()


@dataclass(frozen=True)
class Classification:
    record: ClassRecord
    adjoint: object
    vmin: object

    @property
    def label(self) -> str:
        return self.record.label


def classify_full(group: str, p: int, word) -> Classification:
    group = _group(group)
    ring = _ring_for(p)
    parity = parity_of(p)
    w = _word(word)
    cands = class_records(group, parity)
    if not cands:
        raise NoMatchingClass(f"no tabulated involution classes for {group} ({parity})")
    adj = vmin = None
    if group == "D4" and parity == "even":
        g = build_module(group, "natural", ring).evaluate(w)
        if order_status(g) != INVOLUTION:
            raise NotAnInvolution(f"{w.text() or 'identity'} is not an involution")
        vmin = jordan_partition(g, 2)
        cands = [r for r in cands if _matches(r.vmin, vmin)]
    else:
        g = build_module(group, "adjoint", ring).evaluate(w)
        if order_status(g) != INVOLUTION:
            raise NotAnInvolution(f"{w.text() or 'identity'} is not an involution mod the center")
        adj = _invariant(g, p)
        cands = [r for r in cands if _matches(r.adjoint, adj)]
        if len(cands) > 1:
            # F4 and G2 at p = 2: the adjoint module does not separate A1 from ~A1
            gv = build_module(group, "vmin", ring).evaluate(w)
            vmin = _invariant(gv, p)
            cands = [r for r in cands if _matches(r.vmin, vmin)]
    if len(cands) != 1:
        raise NoMatchingClass(
            f"{group} p={p}: {len(cands)} table rows match adjoint={adj} vmin={vmin}")
    return Classification(cands[0], adj, vmin)


def classify(group: str, p: int, word) -> str:
    """Label of the involution class containing ``word``."""
    return classify_full(group, p, word).label


# ---------------------------------------------------------------------------
# classes meeting the finite group T
# ---------------------------------------------------------------------------

TWISTS = {
    # twisted socle -> (ambient type, twist kind, allowed characteristic)
    "3D4": ("D4", "tau", None),
    "2E6": ("E6", "tau", None),
    "2F4": ("F4", "psi", 2),
    "2G2": ("G2", "psi", 3),
    "2B2": ("B2", "psi", 2),
}

ADVISORIES = {
    ("G2", "none", 2): "G2(2)' is not covered: classes for q = 2 are not computed",
    ("G2", "psi", 3): "2G2(3)' is not covered: classes for q = 3 are not computed",
    ("F4", "psi", 2): "2F4(2)' is not covered: classes for the Tits group are not computed",
}


@dataclass(frozen=True)
class ClassesMeetingT:
    labels: tuple[str, ...]
    advisories: tuple[str, ...] = ()


def classes_meeting_T(group: str, p: int, twist: str = "none") -> ClassesMeetingT:
    """Involution classes of the algebraic group that meet the finite group."""
    twist = {"τ": "tau", "ψ": "psi", None: "none"}.get(twist, twist)
    group = _group(group)
    parity = parity_of(p)
    if twist == "none":
        if group == "D4":
            raise ValueError("D4 is tabulated only for the triality twist")
        recs = class_records(group, parity)
    elif twist in ("tau", "psi"):
        spec = next((v for v in TWISTS.values() if v[0] == group and v[1] == twist), None)
        if spec is None:
            raise ValueError(f"invalid twist {twist!r} for {group}")
        if spec[2] is not None and p != spec[2]:
            raise ValueError(f"{twist} twist of {group} needs p = {spec[2]}")
        flag = "tau_invariant" if twist == "tau" else "psi_invariant"
        recs = [r for r in class_records(group, parity) if getattr(r, flag)]
    else:
        raise ValueError(f"invalid twist {twist!r}")
    if not recs:
        raise ValueError(f"no tabulated involution classes for {group} with p = {p}")
    adv = ADVISORIES.get((group, twist, p))
    return ClassesMeetingT(tuple(r.label for r in recs), (adv,) if adv else ())


# ---------------------------------------------------------------------------
# graph and exceptional symmetries on simple-root words
# ---------------------------------------------------------------------------

def apply_symmetry(word, kind: str, group: str) -> GeneratorWord:
    """Image of a word in simple-root generators under tau or psi.

    Under psi a short root coefficient t becomes t^2; signs on +-simple roots are +1.
    """
    sym = dynkin_symmetry(group, kind)
    rank = len(sym.perm)
    out = []
    for t in _word(word).tokens:
        if abs(t.index) > rank:
            raise ValueError(f"token {t.text()} does not index a simple root")
        j = sym.image(t.index)
        e = sym.exponent(t.index)
        if t.kind == "n":
            out.append(Token("n", j))
        else:
            out.append(Token(t.kind, j, Fraction(t.coeff) ** e))
    return GeneratorWord(tuple(out))


def commutes(word_a, word_b, module) -> bool:
    A = module.evaluate(_word(word_a))
    B = module.evaluate(_word(word_b))
    return A.commutes_with(B)
