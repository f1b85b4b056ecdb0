"""Chevalley basis: structure constants, the adjoint module and generator words.

Structure constants follow the extraspecial-pair method: N_{a,b} is fixed to be
positive on every extraspecial pair and everything else is forced by the
standard identities.  The Jacobi identity is checked once per type when the
table is built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .rootsys import RootSystem, build_root_system


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class StructureConstants:
    rs: RootSystem
    N: dict                      # (a, b) signed indices -> nonzero int
    extraspecial: dict           # xi -> (alpha, beta) positive indices
    pbar: dict                   # (a, b) -> max k with b - k a a root

    def __call__(self, a: int, b: int) -> int:
        return self.N.get((a, b), 0)

    def sum_index(self, a: int, b: int) -> int | None:
        ca, cb = self.rs.coeffs(a), self.rs.coeffs(b)
        return self.rs.index_of(tuple(x + y for x, y in zip(ca, cb)))


def _pbar(rs: RootSystem, a, b) -> int:
    ca, cb = rs.coeffs(a), rs.coeffs(b)
    k = 0
    while rs.is_root(tuple(y - (k + 1) * x for x, y in zip(ca, cb))):
        k += 1
    return k


def _compute_table(rs: RootSystem) -> StructureConstants:
    npos = rs.num_positive
    add = {}
    for a in rs.signed_indices():
        ca = rs.coeffs(a)
        for b in rs.signed_indices():
            s = rs.index_of(tuple(x + y for x, y in zip(ca, rs.coeffs(b))))
            if s is not None:
                add[(a, b)] = s
    norm = {i: rs.norm(i) for i in rs.signed_indices()}

    special: dict = {}   # (alpha, beta) positive, alpha < beta, alpha+beta = xi
    extra: dict = {}

    def N(x, y):
        if (x, y) not in add:
            return 0
        if x > 0 and y > 0:
            return special[(x, y)] if x < y else -special[(y, x)]
        if x < 0 and y < 0:
            return -N(-x, -y)
        z = -add[(x, y)]
        # N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)
        if (y > 0) == (z > 0):
            v = Fraction(norm[z], norm[x]) * N(y, z)
        else:
            v = Fraction(norm[z], norm[y]) * N(z, x)
        assert v.denominator == 1
        return int(v)

    by_xi: dict = {}
    for a in range(1, npos + 1):
        for b in range(a + 1, npos + 1):
            s = add.get((a, b))
            if s is not None:
                by_xi.setdefault(s, []).append((a, b))

    for xi in range(1, npos + 1):
        pairs = by_xi.get(xi)
        if not pairs:
            continue
        pairs.sort()
        a1, b1 = pairs[0]
        extra[xi] = (a1, b1)
        special[(a1, b1)] = _pbar(rs, a1, b1) + 1
        n1 = special[(a1, b1)]
        for a, b in pairs[1:]:
            t = Fraction(0)
            s = add.get((b1, -a))
            if s is not None and (a1, -b) in add:
                t += Fraction(N(b1, -a) * N(a1, -b), norm[s])
            s = add.get((a1, -a))
            if s is not None and (b1, -b) in add:
                t += Fraction(N(-a, a1) * N(b1, -b), norm[s])
            v = Fraction(norm[xi], n1) * t
            assert v.denominator == 1, (a, b, v)
            special[(a, b)] = int(v)

    table = {}
    pbar = {}
    for (x, y) in add:
        table[(x, y)] = N(x, y)
        pbar[(x, y)] = _pbar(rs, x, y)
    return StructureConstants(rs, table, extra, pbar)


def check_structure_constants(sc: StructureConstants) -> None:
    """Raise AssertionError unless |N| = pbar+1, antisymmetry and Jacobi hold."""
    rs = sc.rs
    for (x, y), v in sc.N.items():
        assert abs(v) == sc.pbar[(x, y)] + 1, ("|N| != p+1", x, y, v)
        assert sc.N[(y, x)] == -v, ("antisymmetry", x, y)
    jacobi_defect(sc, raise_on_fail=True)


def _bracket_arrays(sc: StructureConstants):
    rs = sc.rs
    idx = rs.signed_indices()
    n = len(idx)
    pos = {r: k for k, r in enumerate(idx)}
    Nm = np.zeros((n, n + 1), dtype=np.int64)    # last column: "no root"
    S = np.full((n, n), n, dtype=np.int64)
    for (x, y), v in sc.N.items():
        Nm[pos[x], pos[y]] = v
        S[pos[x], pos[y]] = pos[sc.sum_index(x, y)]
    return idx, pos, Nm, S


def jacobi_defect(sc: StructureConstants, raise_on_fail: bool = False) -> int:
    """Number of failing Jacobi components over all triples of basis elements.

    Only triples of root vectors can fail (the Cartan part is linear).  Triples
    without opposite pairs are checked in vectorised form; those containing an
    opposite pair are handled directly.
    """
    rs = sc.rs
    idx, pos, Nm, S = _bracket_arrays(sc)
    n = len(idx)
    rows = np.arange(n)
    neg = np.array([pos[-r] for r in idx])
    bad = 0
    for a in range(n):
        # coefficient of e_{a+b+c}, indexed [b, c]; a zero-sum triple gives 0 here
        t1 = Nm[:, :n] * Nm[a][S]                                   # N[b,c] N[a,b+c]
        t2 = Nm[:, a][None, :] * Nm[rows[:, None], S[:, a][None, :]]  # N[c,a] N[b,c+a]
        t3 = Nm[a, :n][:, None] * Nm[:, S[a]].T                     # N[a,b] N[c,a+b]
        total = t1 + t2 + t3
        opp = np.zeros((n, n), dtype=bool)
        opp[neg[a], :] = True
        opp[:, neg[a]] = True
        opp[rows, neg] = True
        bad += int(np.count_nonzero(total[~opp]))
    # opposite pairs: [e_a,[e_b,e_-b]] + [e_b,[e_-b,e_a]] + [e_-b,[e_a,e_b]] = 0
    for a in idx:
        for b in idx:
            if b in (a, -a):
                continue
            val = -rs.pairing(a, b)
            s = sc.sum_index(-b, a)
            if s is not None:
                val += sc(-b, a) * sc(b, s)
            s = sc.sum_index(a, b)
            if s is not None:
                val += sc(a, b) * sc(-b, s)
            if val:
                bad += 1
    # zero-sum triples: N_{b,c} h_a + N_{c,a} h_b + N_{a,b} h_c = 0
    for a in idx:
        for b in idx:
            c = sc.sum_index(a, b)
            if c is None:
                continue
            c = -c
            vec = [0] * rs.rank
            for coef, r in ((sc(b, c), a), (sc(c, a), b), (sc(a, b), c)):
                for k, v in enumerate(rs.coroot_coeffs(r)):
                    vec[k] += coef * v
            if any(vec):
                bad += 1
    if bad and raise_on_fail:
        raise AssertionError(f"Jacobi identity fails on {bad} components")
    return bad


@lru_cache(maxsize=None)
def _cached_sc(name: str, verify: bool) -> StructureConstants:
    sc = _compute_table(build_root_system(name))
    if verify:
        check_structure_constants(sc)
    return sc


def compute_structure_constants(rs, verify: bool = True) -> StructureConstants:
    name = rs.name if isinstance(rs, RootSystem) else build_root_system(rs).name
    if verify:
        return _cached_sc(name, True)
    return _cached_sc(name, False)


# ---------------------------------------------------------------------------
# generator words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str            # "x", "h" or "n"
    index: int           # signed root index
    coeff: Fraction = Fraction(1)

    def text(self) -> str:
        if self.kind == "n":
            return f"n({self.index})"
        c = self.coeff
        cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return f"{self.kind}({self.index},{cs})"

    def inverse(self) -> "Token":
        if self.kind == "x":
            return Token("x", self.index, -self.coeff)
        if self.kind == "h":
            return Token("h", self.index, 1 / self.coeff)
        return Token("n", -self.index)


@dataclass(frozen=True)
class GeneratorWord:
    tokens: tuple[Token, ...] = ()

    def __mul__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.tokens + other.tokens)

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(tuple(t.inverse() for t in reversed(self.tokens)))

    def text(self) -> str:
        return "*".join(t.text() for t in self.tokens)

    __str__ = text

    def __len__(self):
        return len(self.tokens)

    def validate(self, rs: RootSystem) -> None:
        for t in self.tokens:
            if t.index == 0 or abs(t.index) > rs.num_positive:
                raise IndexError(f"root index {t.index} out of range for {rs.name}")
            if t.kind == "h" and t.coeff == 0:
                raise ZeroDivisionError("h-coefficient must be invertible")


class WordSyntaxError(ValueError):
    pass


_COEFF = r"[+-]?\d+(?:/[+-]?\d+)?"
_TERM = re.compile(
    rf"\s*(?:(?P<k>[xh])\(\s*(?P<i>[+-]?\d+)\s*,\s*(?P<c>{_COEFF})\s*\)|n\(\s*(?P<j>[+-]?\d+)\s*\))\s*"
)


def parse_word(text: str) -> GeneratorWord:
    """Parse ``term ("*" term)*``; the empty string is the identity."""
    if text is None or not text.strip():
        return GeneratorWord(())
    toks = []
    for part in text.split("*"):
        m = _TERM.fullmatch(part)
        if not m:
            raise WordSyntaxError(f"cannot parse term {part!r}")
        if m.group("k"):
            i = int(m.group("i"))
            try:
                c = Fraction(m.group("c"))
            except ZeroDivisionError as e:
                raise WordSyntaxError(f"zero denominator in {part!r}") from e
            if i == 0:
                raise WordSyntaxError("root index 0")
            if m.group("k") == "h" and c == 0:
                raise WordSyntaxError("h-coefficient must be nonzero")
            toks.append(Token(m.group("k"), i, c))
        else:
            i = int(m.group("j"))
            if i == 0:
                raise WordSyntaxError("root index 0")
            toks.append(Token("n", i))
    return GeneratorWord(tuple(toks))


def word(text: str) -> GeneratorWord:
    return parse_word(text)


# ---------------------------------------------------------------------------
# adjoint module and relation checks (the module class lives in weylmod)
# ---------------------------------------------------------------------------

def adjoint_module(sc: StructureConstants):
    from .weylmod import build_adjoint
    return build_adjoint(sc)


def _mat(module, tok_text: str):
    return module.evaluate(parse_word(tok_text))


@dataclass
class RelationReport:
    ok: bool
    checked: int = 0
    failure: str | None = None
    details: list = field(default_factory=list)


def commutator_terms(sc: StructureConstants, a: int, b: int, t=1, u=1):
    """Right-hand side of [x_b(u), x_a(t)] = x_b(u)^-1 x_a(t)^-1 x_b(u) x_a(t)
    as an ordered list of (root, coefficient), increasing i+j."""
    rs = sc.rs

    def M(x, y, i):
        # (1/i!) N_{x,y} N_{x,x+y} ... N_{x,(i-1)x+y}
        v = Fraction(1)
        cur = y
        for k in range(i):
            v *= sc(x, cur)
            cur = sc.sum_index(x, cur)
            if cur is None and k < i - 1:
                return Fraction(0)
        f = 1
        for k in range(2, i + 1):
            f *= k
        return v / f

    ca, cb = rs.coeffs(a), rs.coeffs(b)
    out = []
    for total in range(2, 6):
        for i in range(1, total):
            j = total - i
            r = rs.index_of(tuple(i * x + j * y for x, y in zip(ca, cb)))
            if r is None:
                continue
            if j == 1:
                C = M(a, b, i)
            elif i == 1:
                C = (-1) ** j * M(b, a, j)
            elif (i, j) == (3, 2):
                C = Fraction(1, 3) * M(sc.sum_index(a, b), a, 2)
            elif (i, j) == (2, 3):
                C = Fraction(-2, 3) * M(sc.sum_index(b, a), b, 2)
            else:
                raise AssertionError("unexpected commutator term")
            out.append((r, C * Fraction(-t) ** i * Fraction(u) ** j))
    return out


def verify_chevalley_relations(sc: StructureConstants, module, roots=None,
                               commutators: bool = True) -> RelationReport:
    """Check the defining relations of the group as matrix identities."""
    rs = sc.rs
    ring = module.ring
    roots = list(roots) if roots is not None else rs.signed_indices()
    rep = RelationReport(ok=True)

    def fail(msg):
        rep.ok = False
        rep.failure = msg
        return rep

    I = module.identity()
    for a in roots:
        w = module.evaluate(parse_word(f"n({a})"))
        if w @ w != module.evaluate(parse_word(f"h({a},-1)")):
            return fail(f"w_a^2 != h_a(-1) for a={a}")
        rep.checked += 1
        if ring == 0 or ring > 7:
            s, t = Fraction(2), Fraction(3)
            lhs = module.evaluate(parse_word(f"h({a},{s})*h({a},{t})"))
            if lhs != module.evaluate(parse_word(f"h({a},{s * t})")):
                return fail(f"h_a(st) != h_a(s)h_a(t) for a={a}")
            if module.evaluate(parse_word(f"h({-a},{s})")) != module.evaluate(parse_word(f"h({a},1/{s})")):
                return fail(f"h_-a(t) != h_a(1/t) for a={a}")
            rep.checked += 2
        # h_a(t) = w_a(t) w_a(1)^-1, t = -1
        wt = module.evaluate(parse_word(f"x({a},-1)*x({-a},1)*x({a},-1)"))
        if wt @ w.inverse() != module.evaluate(parse_word(f"h({a},-1)")):
            return fail(f"h_a(t) != w_a(t)w_a(1)^-1 for a={a}")
        rep.checked += 1
    if commutators:
        for a in roots:
            for b in roots:
                if b in (a, -a):
                    continue
                lhs = module.evaluate(parse_word(f"x({b},-1)*x({a},-1)*x({b},1)*x({a},1)"))
                rhs = I
                for r, c in commutator_terms(sc, a, b):
                    if c:
                        rhs = rhs @ module.x_matrix(r, c)
                if lhs != rhs:
                    return fail(f"commutator formula fails for ({a},{b})")
                rep.checked += 1
    return rep
