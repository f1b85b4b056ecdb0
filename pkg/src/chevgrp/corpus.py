"""Regression corpus: quoted matrix computations with their expected outputs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chevbasis import parse_word
from .involutions import NotAnInvolution, classify, jordan_partition, order_status
from .tables import CLASS_RECORDS, JordanType
from .weylmod import build_module

KINDS = ("fixed_dim", "fixed_dim_in", "jordan", "label", "commutes", "order_status")


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    group: str
    char: int                 # 0 for Q, else a prime
    module: str               # "vmin", "adjoint" or "natural"
    word: str
    kind: str
    expected: object
    locator: str
    other: str = ""           # second word for "commutes"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown check kind {self.kind!r}")
        parse_word(self.word)
        if self.other:
            parse_word(self.other)
        ok = {
            "fixed_dim": isinstance(self.expected, int),
            "fixed_dim_in": isinstance(self.expected, tuple),
            "jordan": isinstance(self.expected, str),
            "label": isinstance(self.expected, str),
            "commutes": isinstance(self.expected, bool),
            "order_status": isinstance(self.expected, str),
        }[self.kind]
        if not ok:
            raise TypeError(f"{self.id}: expected value does not fit kind {self.kind}")

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        if isinstance(self.expected, tuple):
            d["expected"] = list(self.expected)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusEntry":
        d = dict(d)
        if isinstance(d["expected"], list):
            d["expected"] = tuple(d["expected"])
        return cls(**d)


def _w(*ix) -> str:
    return "*".join(f"n({i})" for i in ix)


def _h(*ix) -> str:
    return "*".join(f"h({i},-1)" for i in ix)


def _cat(*parts) -> str:
    return "*".join(p for p in parts if p)


def _pow(w: str, k: int) -> str:
    return "*".join([w] * k)


def _table_entries() -> list[CorpusEntry]:
    out = []
    for r in CLASS_RECORDS:
        even = r.parity == "even"
        char = 2 if even else 0
        tag = f"{r.parity}-{r.group}-{r.ascii}"
        loc = f"{r.group} class {r.label}, {'p = 2' if even else 'p odd'}"
        if r.vmin is not None:
            mod = "natural" if r.group == "D4" else "vmin"
            if isinstance(r.vmin, JordanType):
                out.append(CorpusEntry(f"{tag}-vmin", r.group, char, mod, r.word, "jordan",
                                       str(r.vmin), loc))
            elif len(r.vmin) == 1:
                out.append(CorpusEntry(f"{tag}-vmin", r.group, char, mod, r.word, "fixed_dim",
                                       r.vmin[0], loc))
            else:
                out.append(CorpusEntry(f"{tag}-vmin", r.group, char, mod, r.word, "fixed_dim_in",
                                       tuple(r.vmin), loc))
        if r.adjoint is not None:
            if isinstance(r.adjoint, JordanType):
                out.append(CorpusEntry(f"{tag}-adj", r.group, char, "adjoint", r.word, "jordan",
                                       str(r.adjoint), loc))
            else:
                out.append(CorpusEntry(f"{tag}-adj", r.group, char, "adjoint", r.word, "fixed_dim",
                                       r.adjoint, loc))
    return out


_E7_W = _w(1, 2, 5, 7, 37, 55, 61)
_E7_H = _w(2, 28, 38, 46)


def _battery() -> list[CorpusEntry]:
    out = []
    loc = "E7 Weyl longest element commutes with root reflections and h(i,-1)"
    for i in range(1, 64):
        out.append(CorpusEntry(f"e7-battery-n{i}", "E7", 0, "vmin", _E7_W, "commutes", True, loc,
                               other=f"n({i})"))
    for i in range(1, 64):
        out.append(CorpusEntry(f"e7-battery-h{i}", "E7", 0, "vmin", _E7_W, "commutes", True, loc,
                               other=f"h({i},-1)"))
    return out


def _quoted() -> list[CorpusEntry]:
    E = CorpusEntry
    n56 = _w(1, 2, 3, 5, 6, 8, 120, 69)
    w0 = _cat(_h(2, 5, 7), _w(1, 2, 5, 7, 44, 71, 89, 120))
    a56 = _cat(n56, n56, w0)
    b56 = _cat(_h(1, 4), _w(1, 4, 18, 44))
    n67 = _w(2, 32, 5, 7, 1, 4, 6, 65)
    c67 = _cat(_h(2, 3, 4), _w(2, 29, 4, 17))
    a = _cat(_h(2), _w(2, 5))
    b = _w(4, 17)
    return [
        # F4, p = 2 worked example
        E("f4-example-vmin", "F4", 2, "vmin", "x(1,1)*x(4,1)", "fixed_dim", 14,
          "F4 p=2 x(1,1)x(4,1) on V_min"),
        E("f4-example-adj", "F4", 2, "adjoint", "x(1,1)*x(4,1)", "fixed_dim", 28,
          "F4 p=2 x(1,1)x(4,1) on the adjoint module"),
        E("f4-example-label", "F4", 2, "adjoint", "x(1,1)*x(4,1)", "label", "A₁Ã₁",
          "F4 p=2 x(1,1)x(4,1) class"),
        # E7 over Q: the three odd-p classes by generator words
        E("e7-g1", "E7", 0, "adjoint", "h(1,-1)", "fixed_dim", 69, "E7 g1 = h(1,-1)"),
        E("e7-g2", "E7", 0, "adjoint", "n(2)*n(5)*n(7)", "fixed_dim", 79, "E7 g2 = n(2)n(5)n(7)"),
        E("e7-g3", "E7", 0, "adjoint", "h(1,-1)*n(2)*n(5)*n(7)", "fixed_dim", 63, "E7 g3 = g1 g2"),
        E("e7-g2-order", "E7", 0, "vmin", "n(2)*n(5)*n(7)", "order_status",
          "order-4-central-square", "E7 g2 lifts to an element of order 4"),
        # E7 E6T1.2 subgroup example
        E("e7-t", "E7", 0, "adjoint", "h(2,-1)", "fixed_dim", 69, "E7 E6T1.2: t = h(2,-1)"),
        E("e7-thw", "E7", 0, "adjoint", _cat("h(2,-1)", _E7_H, _E7_W), "fixed_dim", 79,
          "E7 E6T1.2: t h w"),
        E("e7-w", "E7", 0, "adjoint", _E7_W, "fixed_dim", 63, "E7 E6T1.2: w"),
        E("e7-w-p2", "E7", 2, "adjoint", _E7_W, "jordan", "(2^63, 1^7)", "E7 p=2 w"),
        E("e7-hw-p2", "E7", 2, "adjoint", _cat(_E7_H, _E7_W), "jordan", "(2^53, 1^27)",
          "E7 p=2 hw"),
        # D4 and F4 at p = 2
        E("d4-n134", "D4", 2, "natural", _w(1, 3, 4), "jordan", "(2^4)",
          "3D4 p=2 n(1)n(3)n(4) on the natural module"),
        E("f4-w0-p2", "F4", 2, "adjoint", _w(1, 3, 14, 21), "jordan", "(2^24, 1^4)",
          "F4 p=2 central Weyl involution"),
        # E6, p = 2 Weyl representatives
        E("e6-n2", "E6", 2, "adjoint", "n(2)", "label", "A₁", "E6 p=2 n(2)"),
        E("e6-n35", "E6", 2, "adjoint", _w(3, 5), "label", "A₁²", "E6 p=2 n(3)n(5)"),
        E("e6-n126", "E6", 2, "adjoint", _w(1, 2, 6), "label", "A₁³", "E6 p=2 n(1)n(2)n(6)"),
        # E8 over Q
        E("e8-a2", "E8", 0, "adjoint", _pow(a, 2), "fixed_dim", 120,
          "E8 (q^2+1)^4 torus: a^2, a = h2 n2 n5"),
        E("e8-ab2", "E8", 0, "adjoint", _pow(_cat(a, b), 2), "fixed_dim", 136,
          "E8 (q^2+1)^4 torus: (ab)^2, b = n4 n17"),
        E("e8-t56-a3", "E8", 0, "adjoint", _pow(a56, 3), "fixed_dim", 120,
          "E8 (q^2+q+1)^4 torus: a^3, a = n^2 w0"),
        E("e8-t56-b", "E8", 0, "adjoint", b56, "fixed_dim", 136,
          "E8 (q^2+q+1)^4 torus: b"),
        E("e8-t67-a6", "E8", 0, "adjoint", _pow(n67, 6), "fixed_dim", 120,
          "E8 (q^4-q^2+1)^2 torus: a^6, a = n"),
        E("e8-t67-c2", "E8", 0, "adjoint", _pow(c67, 2), "fixed_dim", 136,
          "E8 (q^4-q^2+1)^2 torus: c^2"),
        E("e8-a4sq-t1", "E8", 0, "adjoint", _h(1, 6), "fixed_dim", 120,
          "E8 A4^2.4: t1 t1'"),
        E("e8-a4sq-t2", "E8", 0, "adjoint", _h(1, 4, 6, 8), "fixed_dim", 120,
          "E8 A4^2.4: t2 t2'"),
        E("e8-a2a4-t1", "E8", 0, "adjoint", _h(1, 5, 2, 8), "fixed_dim", 120,
          "E8 A2^4 subgroup: t1"),
        E("e8-a2a4-t2", "E8", 0, "adjoint", _h(1, 5), "fixed_dim", 120, "E8 A2^4 subgroup: t2"),
        E("e8-a2a4-t3", "E8", 0, "adjoint", _h(2, 8), "fixed_dim", 120, "E8 A2^4 subgroup: t3"),
        E("e8-d8-label", "E8", 0, "adjoint", _h(1, 2), "label", "D₈", "E8 D8 representative"),
        E("e7-a7-label", "E7", 0, "adjoint", "h(1,-1)*n(2)*n(5)*n(7)", "label", "A₇",
          "E7 A7 representative"),
    ]


def default_corpus() -> list[CorpusEntry]:
    return _table_entries() + _quoted() + _battery()


CORPUS: tuple[CorpusEntry, ...] = tuple(default_corpus())


@dataclass
class CorpusResult:
    entry: CorpusEntry
    ok: bool
    actual: object = None
    error: str = ""

    def to_dict(self) -> dict:
        a = self.actual
        return {"id": self.entry.id, "ok": self.ok,
                "expected": list(self.entry.expected) if isinstance(self.entry.expected, tuple)
                else self.entry.expected,
                "actual": a, "error": self.error, "locator": self.entry.locator}


@dataclass
class ModuleCache:
    mods: dict = field(default_factory=dict)

    def get(self, group: str, module: str, char: int):
        key = (group, "vmin" if module == "natural" else module, char)
        m = self.mods.get(key)
        if m is None:
            m = build_module(group, key[1], char)
            self.mods[key] = m
        return m


def evaluate_entry(e: CorpusEntry, cache: ModuleCache | None = None):
    """Compute the quantity an entry checks."""
    cache = cache or ModuleCache()
    if e.kind == "label":
        return classify(e.group, e.char, e.word)
    m = cache.get(e.group, e.module, e.char)
    g = m.evaluate(e.word)
    if e.kind in ("fixed_dim", "fixed_dim_in"):
        return g.fixed_dim()
    if e.kind == "jordan":
        return str(jordan_partition(g, 2 if e.char == 2 else e.char))
    if e.kind == "commutes":
        return g.commutes_with(m.evaluate(e.other))
    return order_status(g)


def run_entry(e: CorpusEntry, cache: ModuleCache | None = None) -> CorpusResult:
    try:
        actual = evaluate_entry(e, cache)
    except (NotAnInvolution, LookupError, ValueError) as exc:
        return CorpusResult(e, False, None, f"{type(exc).__name__}: {exc}")
    if e.kind == "fixed_dim_in":
        ok = actual in e.expected
    else:
        ok = actual == e.expected
    return CorpusResult(e, ok, actual)


def run_corpus(entries=None) -> list[CorpusResult]:
    cache = ModuleCache()
    return [run_entry(e, cache) for e in (CORPUS if entries is None else entries)]
