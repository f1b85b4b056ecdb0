"""Embedded class and elusivity tables.

The involution class records below are the regression oracle for
:mod:`chevgrp.involutions`; the elusive rows back the ``elusive`` CLI
command and are dumped verbatim by ``--dump-data``.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import asdict, dataclass, field

SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan block sizes, stored as ``((size, count), ...)``."""

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "JordanType":
        return cls(tuple(sorted(((s, c) for s, c in counts.items() if c), reverse=True)))

    @classmethod
    def involution(cls, n: int, r: int) -> "JordanType":
        """(2^r, 1^(n-2r))."""
        if r < 0 or 2 * r > n:
            raise ValueError(f"no partition (2^{r}, 1^{n - 2 * r})")
        return cls.from_counts({2: r, 1: n - 2 * r})

    @classmethod
    def parse(cls, text: str) -> "JordanType":
        body = unicodedata.normalize("NFKC", text).strip().strip("()")
        counts: dict[int, int] = {}
        for part in body.split(","):
            part = part.strip()
            if not part:
                continue
            s, _, c = part.partition("^")
            counts[int(s)] = counts.get(int(s), 0) + (int(c) if c else 1)
        return cls.from_counts(counts)

    @property
    def dim(self) -> int:
        return sum(s * c for s, c in self.parts)

    @property
    def fixed_dim(self) -> int:
        return sum(c for _, c in self.parts)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{s}^{c}" if c != 1 else f"{s}" for s, c in self.parts) + ")"

    def to_list(self) -> list[list[int]]:
        return [list(p) for p in self.parts]


@dataclass(frozen=True)
class ClassRecord:
    group: str
    parity: str                  # "even" (p = 2) or "odd" (p != 2)
    label: str
    ascii: str
    word: str                    # GeneratorWord text
    vmin: JordanType | tuple[int, ...] | None
    adjoint: JordanType | int | None
    tau_invariant: bool = False
    psi_invariant: bool = False
    note: str = ""
    source: str = ""


def _j(text: str) -> JordanType:
    return JordanType.parse(text)


_TAB = "tabulated"

CLASS_RECORDS: tuple[ClassRecord, ...] = (
    # 3D4, p = 2, natural 8-dimensional module
    ClassRecord("D4", "even", "A₁", "A1", "x(1,1)", _j("2^2,1^4"), None,
                tau_invariant=True, note="|C_T(x)| = q^12(q^6-1)", source=_TAB),
    ClassRecord("D4", "even", "A₁³", "A1^3", "x(1,1)*x(3,1)*x(4,1)", _j("2^4"), None,
                tau_invariant=True, note="|C_T(x)| = q^10(q^2-1)", source=_TAB),
    # 3D4, p odd: the single triality-stable class (not tabulated, derived)
    ClassRecord("D4", "odd", "A₁⁴", "A1^4", "h(2,-1)", (4,), 12,
                tau_invariant=True, note="unique class of involutions in 3D4(q)",
                source="derived"),
    # p = 2
    ClassRecord("G2", "even", "Ã₁", "~A1", "x(1,1)", _j("2^3,1"), _j("2^6,1^2"), source=_TAB),
    ClassRecord("G2", "even", "A₁", "A1", "x(2,1)", _j("2^2,1^3"), _j("2^6,1^2"), source=_TAB),
    ClassRecord("F4", "even", "A₁", "A1", "x(1,1)", _j("2^6,1^14"), _j("2^16,1^20"), source=_TAB),
    ClassRecord("F4", "even", "Ã₁", "~A1", "x(4,1)", _j("2^10,1^6"), _j("2^16,1^20"), source=_TAB),
    ClassRecord("F4", "even", "A₁Ã₁", "A1~A1", "x(1,1)*x(4,1)", _j("2^12,1^2"),
                _j("2^24,1^4"), psi_invariant=True, source=_TAB),
    ClassRecord("F4", "even", "(Ã₁)₂", "(~A1)2", "x(6,1)*x(9,1)", _j("2^10,1^6"),
                _j("2^21,1^10"), psi_invariant=True, source=_TAB),
    ClassRecord("E6", "even", "A₁", "A1", "x(2,1)", _j("2^6,1^15"), _j("2^22,1^34"),
                tau_invariant=True, source=_TAB),
    ClassRecord("E6", "even", "A₁²", "A1^2", "x(1,1)*x(6,1)", _j("2^10,1^7"),
                _j("2^32,1^14"), tau_invariant=True, source=_TAB),
    ClassRecord("E6", "even", "A₁³", "A1^3", "x(1,1)*x(2,1)*x(6,1)", _j("2^12,1^3"),
                _j("2^38,1^2"), tau_invariant=True, source=_TAB),
    ClassRecord("E7", "even", "A₁", "A1", "x(1,1)", _j("2^12,1^32"), _j("2^34,1^65"), source=_TAB),
    ClassRecord("E7", "even", "A₁²", "A1^2", "x(1,1)*x(2,1)", _j("2^20,1^16"),
                _j("2^52,1^29"), source=_TAB),
    ClassRecord("E7", "even", "(A₁³)⁽¹⁾", "(A1^3)(1)", "x(2,1)*x(5,1)*x(7,1)", _j("2^28"),
                _j("2^53,1^27"), source=_TAB),
    ClassRecord("E7", "even", "(A₁³)⁽²⁾", "(A1^3)(2)", "x(3,1)*x(5,1)*x(7,1)", _j("2^24,1^8"),
                _j("2^62,1^9"), source=_TAB),
    ClassRecord("E7", "even", "A₁⁴", "A1^4", "x(2,1)*x(3,1)*x(5,1)*x(7,1)", _j("2^28"),
                _j("2^63,1^7"), source=_TAB),
    ClassRecord("E8", "even", "A₁", "A1", "x(1,1)", None, _j("2^58,1^132"), source=_TAB),
    ClassRecord("E8", "even", "A₁²", "A1^2", "x(1,1)*x(4,1)", None, _j("2^92,1^64"), source=_TAB),
    ClassRecord("E8", "even", "A₁³", "A1^3", "x(1,1)*x(4,1)*x(6,1)", None,
                _j("2^110,1^28"), source=_TAB),
    ClassRecord("E8", "even", "A₁⁴", "A1^4", "x(1,1)*x(4,1)*x(6,1)*x(8,1)", None,
                _j("2^120,1^8"), source=_TAB),
    # p odd: fixed-point dimensions
    ClassRecord("G2", "odd", "A₁Ã₁", "A1~A1", "h(1,-1)*h(2,-1)", (3,), 6,
                psi_invariant=True, note="psi-invariant if p = 3", source=_TAB),
    ClassRecord("F4", "odd", "A₁C₃", "A1C3", "h(1,-1)", (14,), 24, source=_TAB),
    ClassRecord("F4", "odd", "B₄", "B4", "h(4,-1)", (10,), 36, source=_TAB),
    ClassRecord("E6", "odd", "A₁A₅", "A1A5", "h(2,-1)", (15,), 38, tau_invariant=True, source=_TAB),
    ClassRecord("E6", "odd", "D₅T₁", "D5T1", "h(1,-1)*h(6,-1)", (11,), 46,
                tau_invariant=True, source=_TAB),
    ClassRecord("E7", "odd", "A₁D₆", "A1D6", "h(1,-1)", (32, 24), 69,
                note="V_min entry depends on the lift", source=_TAB),
    ClassRecord("E7", "odd", "E₆T₁", "E6T1", "n(2)*n(5)*n(7)", (0,), 79,
                note="lift has order 4 with square z", source=_TAB),
    ClassRecord("E7", "odd", "A₇", "A7", "h(1,-1)*n(2)*n(5)*n(7)", (0,), 63,
                note="lift has order 4 with square z", source=_TAB),
    ClassRecord("E8", "odd", "A₁E₇", "A1E7", "h(1,-1)", None, 136, source=_TAB),
    ClassRecord("E8", "odd", "D₈", "D8", "h(1,-1)*h(2,-1)", None, 120, source=_TAB),
)


def parity_of(p: int) -> str:
    return "even" if p == 2 else "odd"


def class_records(group: str | None = None, parity: str | None = None) -> list[ClassRecord]:
    return [r for r in CLASS_RECORDS
            if (group is None or r.group == group) and (parity is None or r.parity == parity)]


def find_label(group: str, parity: str, label: str) -> ClassRecord:
    key = unicodedata.normalize("NFKC", label)
    for r in class_records(group, parity):
        if key in (unicodedata.normalize("NFKC", r.label), r.ascii):
            return r
    raise KeyError(f"no class {label!r} for {group} ({parity})")


# ---------------------------------------------------------------------------
# 2-elusivity tables
# ---------------------------------------------------------------------------

VERDICTS = {
    "A": "not-2-elusive",
    "B": "2-elusive",
    "C": "conditional",
}

SOCLES = ("2B2", "2G2", "G2", "3D4", "2F4", "F4", "E6", "2E6", "E7", "E8")


@dataclass(frozen=True)
class ElusiveRow:
    table: str          # "A", "B" or "C"
    socle: str          # descriptor as printed, e.g. "²F₄(q)′" or "E₆^ε(q)"
    socles: tuple[str, ...]
    h0: str
    conditions: str

    @property
    def verdict(self) -> str:
        return VERDICTS[self.table]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["socles"] = list(self.socles)
        d["verdict"] = self.verdict
        return d


_F = ("2F4",)
_D = ("3D4",)
_E6 = ("E6", "2E6")

ELUSIVE_ROWS: tuple[ElusiveRow, ...] = (
    ElusiveRow("A", "²F₄(q)′", _F, "3¹⁺²:D₈, 13:6", "q=2, G = T.2"),
    ElusiveRow("A", "²F₄(q)′", _F, "PGU₃(q).2, SU₃(q).2, (q+1)²:GL₂(3)", "q ⩾ 8"),
    ElusiveRow("A", "²F₄(q)′", _F, "(q² ± √(2q³)+q ± √(2q)+1):12", "q ⩾ 8"),
    ElusiveRow("A", "³D₄(q)", _D, "(q⁴−q²+1).4, (q²±q+1)².SL₂(3)", "p=2"),
    ElusiveRow("A", "³D₄(q)", _D, "PGL₃^ε(q)", "p=2, q ⩾ 4, q ≡ ε (mod 3)"),
    ElusiveRow("A", "F₄(q)", ("F4",), "³D₄(q).3", "p ⩾ 3"),
    ElusiveRow("A", "F₄(q)", ("F4",), "PGL₂(q)", "p ⩾ 13"),
    ElusiveRow("A", "F₄(q)", ("F4",), "G₂(q)", "p = 7"),
    ElusiveRow("A", "F₄(q)", ("F4",), "ASL₃(3)", "q = p ⩾ 5"),
    ElusiveRow("A", "F₄(q)", ("F4",), "²F₄(q₀)", "q = q₀², q₀ = 2^a, a ⩾ 1 odd"),
    ElusiveRow("A", "F₄(q)", ("F4",), "(SL₃^ε(q) ∘ SL₃^ε(q)).e.2", "p = 2, e = (3,q−ε)"),
    ElusiveRow("A", "F₄(q)", ("F4",), "Sp₄(q²).2", "p=2, graphs"),
    ElusiveRow("A", "F₄(q)", ("F4",), "(q²+εq+1)².(3 × SL₂(3))",
               "p = 2, graphs, q ⩾ 4 if ε=−"),
    ElusiveRow("A", "F₄(q)", ("F4",), "(q⁴−q²+1).12, (q²+1)².(SL₂(3):4)", "p = 2, graphs, q ⩾ 4"),
    ElusiveRow("A", "E₆^ε(q)", _E6, "L₃^ε(q³).3, G₂(q), (³D₄(q) × (q²+εq+1)/e).3", ""),
    ElusiveRow("A", "E₆^ε(q)", _E6, "(q²+εq+1)³/e.(3¹⁺².SL₂(3))", ""),
    ElusiveRow("A", "E₆^ε(q)", _E6, "PGL₃^±(q).2", "p ⩾ 5, q ≡ ε (mod 4)"),
    ElusiveRow("A", "E₆^ε(q)", _E6, "3³⁺³:SL₃(3)", "q = p ⩾ 5, q ≡ ε (mod 3)"),
    ElusiveRow("A", "E₇(q)", ("E7",), "P₂, P₅, P₇", "q ≡ 3 (mod 4)"),
    ElusiveRow("A", "E₇(q)", ("E7",), "(L₂(q³) × ³D₄(q)).3, L₂(q⁷).7", ""),
    ElusiveRow("A", "E₇(q)", ("E7",), "L₂(q) × PGL₂(q), PGL₃^±(q).2", "p ⩾ 5"),
    ElusiveRow("A", "E₇(q)", ("E7",), "³D₄(q).3", "p ⩾ 3"),
    ElusiveRow("A", "E₇(q)", ("E7",), "L₂(q)", "2 classes; p ⩾ 17,19"),
    ElusiveRow("A", "E₈(q)", ("E8",), "SU₅(q²).4, PGU₅(q²).4, U₃(q²)².8, U₃(q⁴).8", ""),
    ElusiveRow("A", "E₈(q)", ("E8",), "(q⁴ ± q³ + q² ± q +1)².(5 × SL₂(5))", ""),
    ElusiveRow("A", "E₈(q)", ("E8",), "(q⁸ ± q⁷ ∓ q⁵ − q⁴ ∓ q³ ± q+1).30", ""),
    ElusiveRow("A", "E₈(q)", ("E8",),
               "Ω₈⁺(q²).(Sym₃ × 2), ³D₄(q²).6, (q² + q +1)⁴.2.(3 × U₄(2))", "p = 2"),
    ElusiveRow("A", "E₈(q)", ("E8",),
               "(q⁴−q²+1)².(12 ∘ GL₂(3)), (q²+1)⁴.(4 ∘ 2¹⁺⁴).Alt₆.2", "p=2"),
    ElusiveRow("A", "E₈(q)", ("E8",), "(q² − q +1)⁴.2.(3 × U₄(2))", "p = 2, q ⩾ 4"),
    ElusiveRow("A", "E₈(q)", ("E8",), "F₄(q)", "p = 3"),
    ElusiveRow("A", "E₈(q)", ("E8",), "SO₅(q)", "p ⩾ 5"),
    ElusiveRow("A", "E₈(q)", ("E8",), "PGL₂(q)", "3 classes; p ⩾ 23,29,31"),
    ElusiveRow("A", "E₈(q)", ("E8",), "ASL₃(5)", "p ≠ 2,5"),
    ElusiveRow("B", "G₂(q)′", ("G2",), "J₂", "q = 4"),
    ElusiveRow("B", "G₂(q)′", ("G2",), "J₁", "q = 11"),
    ElusiveRow("B", "G₂(q)′", ("G2",), "U₃(3).2", "q = p ⩾ 5"),
    ElusiveRow("B", "G₂(q)′", ("G2",), "L₂(13)",
               "q=p ≡ ±1, ±3, ±4 (mod 13), or q=p², p ≠ 2 and p ≡ ±2, ±5, ±6 (mod 13)"),
    ElusiveRow("B", "G₂(q)′", ("G2",), "L₂(8)",
               "q=p ≡ ±1 (mod 9), or q=p³, p ≠ 2 and p ≡ ±2, ±4 (mod 9)"),
    ElusiveRow("B", "²F₄(q)′", _F, "Alt₆.2²", "q = 2, G=T"),
    ElusiveRow("B", "F₄(q)", ("F4",), "L₄(3).2₂", "q = 2"),
    ElusiveRow("B", "F₄(q)", ("F4",), "³D₄(2).3", "q = p ⩾ 3"),
    ElusiveRow("B", "E₆^ε(q)", _E6, "²F₄(2)", "q = p ≡ ε (mod 4), G=T"),
    ElusiveRow("B", "E₆^ε(q)", _E6, "Ω₇(3)", "(ε,q) = (−,2), G = T.2"),
    ElusiveRow("B", "E₆^ε(q)", _E6, "Fi₂₂", "(ε,q) = (−,2)"),
    ElusiveRow("C", "E₈(q)", ("E8",), "Sym₆, Alt₆.2 ≅ PGL₂(9), Alt₆.2²", "p ≠ 2,5"),
    ElusiveRow("C", "E₈(q)", ("E8",), "PGL₂(r)", "(r,p) = (7,3), (11,5), (13,7)"),
    ElusiveRow("C", "E₈(q)", ("E8",), "L₃(3).2", "p=13"),
)


def normalize_socle(text: str) -> str:
    """Map ``²F₄``, ``2F4``, ``3d4`` and similar spellings to a key in SOCLES."""
    s = unicodedata.normalize("NFKC", text).replace(" ", "").upper()
    s = s.replace("(Q)", "").replace("'", "").replace("′", "")
    if s in SOCLES:
        return s
    raise ValueError(f"unknown socle {text!r}; expected one of {', '.join(SOCLES)}")


def _fold(s: str) -> str:
    return unicodedata.normalize("NFKC", s).casefold()


def elusive_rows(socle: str, filter_text: str | None = None) -> list[ElusiveRow]:
    key = normalize_socle(socle)
    rows = [r for r in ELUSIVE_ROWS if key in r.socles]
    if filter_text:
        f = _fold(filter_text)
        rows = [r for r in rows if f in _fold(r.h0) or f in _fold(r.conditions)]
    return rows


# ---------------------------------------------------------------------------
# dump / load
# ---------------------------------------------------------------------------

def _record_to_dict(r: ClassRecord) -> dict:
    def enc(v):
        if isinstance(v, JordanType):
            return {"jordan": v.to_list()}
        if isinstance(v, tuple):
            return {"fixed_dims": list(v)}
        if isinstance(v, int):
            return {"fixed_dim": v}
        return None

    return {
        "group": r.group, "parity": r.parity, "label": r.label, "ascii": r.ascii,
        "word": r.word, "vmin": enc(r.vmin), "adjoint": enc(r.adjoint),
        "tau_invariant": r.tau_invariant, "psi_invariant": r.psi_invariant,
        "note": r.note, "source": r.source,
    }


def _record_from_dict(d: dict) -> ClassRecord:
    def dec(v):
        if v is None:
            return None
        if "jordan" in v:
            return JordanType(tuple(tuple(p) for p in v["jordan"]))
        if "fixed_dims" in v:
            return tuple(v["fixed_dims"])
        return v["fixed_dim"]

    return ClassRecord(d["group"], d["parity"], d["label"], d["ascii"], d["word"],
                       dec(d["vmin"]), dec(d["adjoint"]), d["tau_invariant"],
                       d["psi_invariant"], d["note"], d["source"])


def dump_data(corpus=None) -> str:
    """Serialize every embedded table (and the corpus, if given) as JSON."""
    return dump_bundle(DataBundle(SCHEMA_VERSION, list(CLASS_RECORDS), list(ELUSIVE_ROWS),
                                  None if corpus is None else list(corpus)))


@dataclass
class DataBundle:
    schema_version: str
    class_records: list[ClassRecord] = field(default_factory=list)
    elusive_rows: list[ElusiveRow] = field(default_factory=list)
    corpus: list | None = None


def load_data(text: str) -> DataBundle:
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"schema version {doc.get('schema_version')!r} != {SCHEMA_VERSION}")
    rows = [ElusiveRow(d["table"], d["socle"], tuple(d["socles"]), d["h0"], d["conditions"])
            for d in doc["elusive_rows"]]
    corpus = None
    if "corpus" in doc:
        from .corpus import CorpusEntry
        corpus = [CorpusEntry.from_dict(d) for d in doc["corpus"]]
    return DataBundle(doc["schema_version"],
                      [_record_from_dict(d) for d in doc["class_records"]], rows, corpus)


def dump_bundle(b: DataBundle) -> str:
    doc = {
        "schema_version": b.schema_version,
        "class_records": [_record_to_dict(r) for r in b.class_records],
        "elusive_rows": [r.to_dict() for r in b.elusive_rows],
    }
    if b.corpus is not None:
        doc["corpus"] = [c.to_dict() for c in b.corpus]
    return json.dumps(doc, ensure_ascii=False, indent=1, sort_keys=True) + "\n"
