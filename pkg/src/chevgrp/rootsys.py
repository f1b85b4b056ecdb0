"""Root systems from Cartan matrices, Bourbaki numbering.

Positive roots are integer coefficient vectors over the simple roots, ordered
first by height and then, within a height, so that larger leading coefficients
come first.  Index ``i`` (1-based) names the i-th positive root, ``-i`` its
negative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

SUPPORTED = ("A", "B", "C", "D", "E", "F", "G")


def cartan_matrix(letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """A[i][j] = <alpha_j, alpha_i^vee>, Bourbaki labelling."""
    n = rank
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    if letter == "A" and n >= 1:
        for i in range(1, n):
            link(i, i + 1)
    elif letter == "B" and n >= 2:
        for i in range(1, n - 1):
            link(i, i + 1)
        # alpha_n short
        link(n - 1, n, aij=-1, aji=-2)
    elif letter == "C" and n >= 2:
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 1, n, aij=-2, aji=-1)
    elif letter == "D" and n >= 4:
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif letter == "E" and n in (6, 7, 8):
        link(1, 3)
        link(2, 4)
        link(3, 4)
        for i in range(4, n):
            link(i, i + 1)
    elif letter == "F" and n == 4:
        link(1, 2)
        link(2, 3, aij=-1, aji=-2)
        link(3, 4)
    elif letter == "G" and n == 2:
        # alpha_1 short: <alpha_2, alpha_1^vee> = -3
        link(1, 2, aij=-3, aji=-1)
    else:
        raise ValueError(f"unsupported type {letter}{n}")
    return tuple(tuple(r) for r in A)


def parse_type(label) -> tuple[str, int]:
    if isinstance(label, tuple):
        letter, rank = label
    else:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", str(label))
        if not m:
            raise ValueError(f"bad type label {label!r}")
        letter, rank = m.group(1), int(m.group(2))
    letter = letter.upper()
    if letter not in SUPPORTED:
        raise ValueError(f"unsupported type {label!r}")
    cartan_matrix(letter, int(rank))  # validates
    return letter, int(rank)


@dataclass(frozen=True)
class Root:
    signed_index: int
    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def positive(self) -> bool:
        return self.signed_index > 0


@dataclass(frozen=True, eq=False)
class RootSystem:
    letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    simple_norms: tuple[int, ...]          # (alpha_i, alpha_i), short roots = 2
    _index: dict = field(repr=False)

    # basic data ---------------------------------------------------------
    @property
    def type_label(self) -> tuple[str, int]:
        return (self.letter, self.rank)

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def dim_adjoint(self) -> int:
        return 2 * self.num_positive + self.rank

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.positive_roots)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def signed_indices(self):
        N = self.num_positive
        return [i for i in range(-N, N + 1) if i]

    def coeffs(self, i: int) -> tuple[int, ...]:
        if i == 0 or abs(i) > self.num_positive:
            raise IndexError(f"root index {i} out of range for {self.name}")
        c = self.positive_roots[abs(i) - 1]
        return c if i > 0 else tuple(-x for x in c)

    def root(self, i: int) -> Root:
        return Root(i, self.coeffs(i))

    def index_of(self, coeffs) -> int | None:
        """Signed index of a coefficient vector, or None if not a root."""
        return self._index.get(tuple(coeffs))

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self._index

    def height(self, i: int) -> int:
        return sum(self.coeffs(i))

    # bilinear form ------------------------------------------------------
    def inner(self, a, b) -> int:
        """(a, b) for coefficient vectors, normalised so short roots have norm 2."""
        A, d = self.cartan, self.simple_norms
        s = 0
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        # (alpha_i, alpha_j) = A[i][j] * d_i / 2
                        s += ai * bj * A[i][j] * d[i]
        return s // 2

    def norm(self, i: int) -> int:
        c = self.coeffs(i)
        return self.inner(c, c)

    def is_long(self, i: int) -> bool:
        return self.norm(i) == max(self.simple_norms)

    def length_class(self, i: int) -> str:
        if len(set(self.simple_norms)) == 1:
            return "long"
        return "long" if self.is_long(i) else "short"

    def pairing_vec(self, b, a) -> int:
        """<b, a^vee> for coefficient vectors."""
        num = 2 * self.inner(b, a)
        den = self.inner(a, a)
        if num % den:
            raise ArithmeticError("non-integral pairing")
        return num // den

    def pairing(self, b: int, a: int) -> int:
        """<beta, alpha^vee> for signed root indices."""
        return self.pairing_vec(self.coeffs(b), self.coeffs(a))

    def coroot_coeffs(self, i: int) -> tuple[int, ...]:
        """alpha^vee in the basis of simple coroots."""
        c = self.coeffs(i)
        n = self.inner(c, c)
        out = []
        for k, ck in enumerate(c):
            v = Fraction(ck * self.simple_norms[k], n)
            if v.denominator != 1:
                raise ArithmeticError("non-integral coroot")
            out.append(int(v))
        return tuple(out)

    def weight_pairing(self, mu, i: int) -> int:
        """<mu, alpha_i^vee> where mu is given by its Dynkin labels."""
        return sum(m * c for m, c in zip(mu, self.coroot_coeffs(i)))

    def root_dynkin(self, i: int) -> tuple[int, ...]:
        """Dynkin labels (<alpha, alpha_j^vee>)_j of a root."""
        c = self.coeffs(i)
        return tuple(sum(c[k] * self.cartan[j][k] for k in range(self.rank))
                     for j in range(self.rank))

    @property
    def pairing_table(self):
        idx = self.signed_indices()
        return {(b, a): self.pairing(b, a) for b in idx for a in idx}

    # ordering -----------------------------------------------------------
    def sort_key(self, coeffs):
        return (sum(coeffs), tuple(-c for c in coeffs))

    def compare_roots(self, a: Root | int, b: Root | int) -> int:
        """-1, 0, 1 according to the canonical order of positive roots."""
        ia = a.signed_index if isinstance(a, Root) else a
        ib = b.signed_index if isinstance(b, Root) else b
        if isinstance(a, Root) and self.index_of(a.coeffs) != ia:
            raise ValueError("root does not belong to this system")
        if isinstance(b, Root) and self.index_of(b.coeffs) != ib:
            raise ValueError("root does not belong to this system")
        if ia <= 0 or ib <= 0:
            raise ValueError("compare_roots takes positive roots")
        return (ia > ib) - (ia < ib)

    def __repr__(self):
        return f"RootSystem({self.name})"


def _enumerate_positive(A, rank):
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)

    def pair(beta, i):
        # <beta, alpha_i^vee> = sum_k beta_k A[i][k]
        return sum(beta[k] * A[i][k] for k in range(rank))

    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                # p = largest k with beta - k alpha_i a root
                p = 0
                b = list(beta)
                while True:
                    b[i] -= 1
                    if tuple(b) in roots:
                        p += 1
                    else:
                        break
                q = p - pair(beta, i)
                if q > 0:
                    g = list(beta)
                    g[i] += 1
                    g = tuple(g)
                    if g not in roots:
                        roots.add(g)
                        nxt.append(g)
        layer = nxt
    return roots


def _simple_norms(A, rank):
    # d_i A_ij symmetric; pick the smallest positive integer solution
    d = [None] * rank
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if A[i][j] and d[j] is None:
                d[j] = d[i] * A[i][j] / A[j][i]
                stack.append(j)
    from math import lcm
    den = lcm(*[x.denominator for x in d])
    ints = [int(x * den) for x in d]
    m = min(ints)
    return tuple(2 * x // m for x in ints)


@lru_cache(maxsize=None)
def _build(letter: str, rank: int) -> RootSystem:
    A = cartan_matrix(letter, rank)
    pos = sorted(_enumerate_positive(A, rank), key=lambda c: (sum(c), tuple(-x for x in c)))
    index = {}
    for i, c in enumerate(pos, start=1):
        index[c] = i
        index[tuple(-x for x in c)] = -i
    return RootSystem(letter, rank, A, tuple(pos), _simple_norms(A, rank), index)


def build_root_system(type_label) -> RootSystem:
    letter, rank = parse_type(type_label)
    return _build(letter, rank)


# Dynkin diagram symmetries ---------------------------------------------------

@dataclass(frozen=True)
class DynkinSymmetry:
    kind: str                    # "tau" or "psi"
    perm: tuple[int, ...]        # perm[i-1] = image of simple index i
    square_twist: tuple[bool, ...]  # psi: t -> t^2 on short simple roots

    def image(self, i: int) -> int:
        s = 1 if i > 0 else -1
        return s * self.perm[abs(i) - 1]

    def order(self) -> int:
        k, p = 1, self.perm
        cur = p
        while cur != tuple(range(1, len(p) + 1)):
            cur = tuple(p[c - 1] for c in cur)
            k += 1
        return k

    def compose(self, other: "DynkinSymmetry") -> "DynkinSymmetry":
        """self after other: first apply other, then self."""
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(len(self.perm)))
        # each t -> t^2 twist multiplies the exponent; record total exponent parity via bools
        tw = tuple(other.square_twist[i] or self.square_twist[other.perm[i] - 1]
                   for i in range(len(self.perm)))
        return DynkinSymmetry(f"{self.kind}*{other.kind}", perm, tw)

    def exponent(self, i: int) -> int:
        return 2 if self.square_twist[abs(i) - 1] else 1


def dynkin_symmetry(type_label, kind: str) -> DynkinSymmetry:
    letter, rank = parse_type(type_label)
    kind = {"τ": "tau", "ψ": "psi"}.get(kind, kind)
    name = f"{letter}{rank}"
    none = (False,) * rank
    if kind == "tau":
        if name == "D4":
            return DynkinSymmetry("tau", (3, 2, 4, 1), none)
        if name == "E6":
            return DynkinSymmetry("tau", (6, 2, 5, 4, 3, 1), none)
        if letter == "D":
            perm = list(range(1, rank + 1))
            perm[rank - 2], perm[rank - 1] = rank, rank - 1
            return DynkinSymmetry("tau", tuple(perm), none)
        if letter == "A" and rank >= 2:
            return DynkinSymmetry("tau", tuple(range(rank, 0, -1)), none)
    if kind == "tau2" and name == "D4":
        # the graph involution alpha_3 <-> alpha_4
        return DynkinSymmetry("tau", (1, 2, 4, 3), none)
    if kind == "psi":
        rs = build_root_system(name)
        if name in ("B2", "C2", "G2", "F4"):
            perm = tuple(range(rank, 0, -1))
            tw = tuple(rs.length_class(i) == "short" for i in range(1, rank + 1))
            return DynkinSymmetry("psi", perm, tw)
    raise ValueError(f"no symmetry {kind!r} for {name}")
