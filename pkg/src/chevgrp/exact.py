"""Dense exact matrices over Q or a prime field F_p.

Thin wrapper around python-flint's ``fmpq_mat`` and ``nmod_mat`` so the rest of
the package never has to care which backend is in play.  The ring is encoded as
an integer: ``0`` for Q, a prime ``p`` for F_p.
"""

from __future__ import annotations

from fractions import Fraction

import flint

QQ = 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return bool(flint.fmpz(n).is_prime())


def check_ring(ring: int) -> int:
    ring = int(ring)
    if ring != QQ and not is_prime(ring):
        raise ValueError(f"ring must be 0 (Q) or a prime, got {ring}")
    if ring >= 2**63:
        raise ValueError("prime too large for word-sized arithmetic")
    return ring


def to_scalar(c, ring: int):
    """Coerce an int / Fraction / str coefficient into the ring."""
    if isinstance(c, str):
        c = Fraction(c)
    if isinstance(c, flint.fmpq):
        c = Fraction(int(c.p), int(c.q))
    c = Fraction(c)
    if ring == QQ:
        return flint.fmpq(c.numerator, c.denominator)
    if c.denominator % ring == 0:
        raise ZeroDivisionError(f"{c} has no image in F_{ring}")
    return flint.nmod(c.numerator, ring) / flint.nmod(c.denominator, ring)


def scalar_is_zero(c, ring: int) -> bool:
    return int(to_scalar(c, ring) == 0) == 1


class ExactMatrix:
    """Square or rectangular matrix with entries in Q or F_p."""

    __slots__ = ("ring", "m")

    def __init__(self, m, ring: int):
        self.ring = ring
        self.m = m

    # construction -----------------------------------------------------
    @classmethod
    def from_fmpz(cls, a: flint.fmpz_mat, ring: int) -> "ExactMatrix":
        if ring == QQ:
            return cls(flint.fmpq_mat(a), ring)
        return cls(flint.nmod_mat(a, ring), ring)

    @classmethod
    def from_rows(cls, rows, ring: int = QQ) -> "ExactMatrix":
        ring = check_ring(ring)
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if ring == QQ:
            m = flint.fmpq_mat(nr, nc)
        else:
            m = flint.nmod_mat(nr, nc, ring)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if v:
                    m[i, j] = to_scalar(v, ring)
        return cls(m, ring)

    @classmethod
    def identity(cls, n: int, ring: int = QQ) -> "ExactMatrix":
        ring = check_ring(ring)
        return cls.from_fmpz(_eye(n), ring)

    @classmethod
    def diagonal(cls, entries, ring: int = QQ) -> "ExactMatrix":
        n = len(entries)
        if ring == QQ:
            m = flint.fmpq_mat(n, n)
        else:
            m = flint.nmod_mat(n, n, ring)
        for i, v in enumerate(entries):
            m[i, i] = v
        return cls(m, ring)

    # shape ------------------------------------------------------------
    @property
    def nrows(self) -> int:
        return self.m.nrows()

    @property
    def ncols(self) -> int:
        return self.m.ncols()

    def _same(self, other: "ExactMatrix"):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("ring mismatch")
        return other

    # arithmetic -------------------------------------------------------
    def __matmul__(self, other):
        self._same(other)
        return ExactMatrix(self.m * other.m, self.ring)

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return self @ c
        return ExactMatrix(self.m * to_scalar(c, self.ring), self.ring)

    __rmul__ = __mul__

    def __add__(self, other):
        self._same(other)
        return ExactMatrix(self.m + other.m, self.ring)

    def __sub__(self, other):
        self._same(other)
        return ExactMatrix(self.m - other.m, self.ring)

    def __neg__(self):
        return ExactMatrix(-self.m, self.ring)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.ring == other.ring and bool(self.m == other.m)

    def __hash__(self):
        raise TypeError("ExactMatrix is unhashable")

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ExactMatrix.identity(self.nrows, self.ring)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def inverse(self) -> "ExactMatrix":
        return ExactMatrix(self.m.inv(), self.ring)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.m.transpose(), self.ring)

    # invariants -------------------------------------------------------
    def rank(self) -> int:
        return int(self.m.rank())

    def det(self):
        return self.m.det()

    def fixed_dim(self) -> int:
        """dim ker(M - I)."""
        n = self.nrows
        return n - (self - ExactMatrix.identity(n, self.ring)).rank()

    def is_identity(self) -> bool:
        return self == ExactMatrix.identity(self.nrows, self.ring)

    def is_zero(self) -> bool:
        if self.ring == QQ:
            return bool(self.m == flint.fmpq_mat(self.nrows, self.ncols))
        return bool(self.m == flint.nmod_mat(self.nrows, self.ncols, self.ring))

    def scalar_value(self):
        """Return c if the matrix is c*I, else None."""
        n = self.nrows
        if n == 0:
            return None
        c = self.m[0, 0]
        if self == ExactMatrix.identity(n, self.ring) * _as_frac(c, self.ring):
            return c
        return None

    def entry(self, i: int, j: int):
        return self.m[i, j]

    def tolist(self):
        if self.ring == QQ:
            return [[Fraction(int(v.p), int(v.q)) for v in row] for row in self.m.tolist()]
        return [[int(v) for v in row] for row in self.m.tolist()]

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return (self @ other) == (other @ self)

    def __repr__(self):
        tag = "QQ" if self.ring == QQ else f"GF({self.ring})"
        return f"ExactMatrix<{self.nrows}x{self.ncols} over {tag}>"


def _as_frac(c, ring):
    if ring == QQ:
        return Fraction(int(c.p), int(c.q))
    return int(c)


_EYE_CACHE: dict[int, flint.fmpz_mat] = {}


def _eye(n: int) -> flint.fmpz_mat:
    e = _EYE_CACHE.get(n)
    if e is None:
        e = flint.fmpz_mat(n, n)
        for i in range(n):
            e[i, i] = 1
        _EYE_CACHE[n] = e
    return e


def fmpz_eye(n: int) -> flint.fmpz_mat:
    return _eye(n)


def fmpz_divexact(a: flint.fmpz_mat, k: int) -> flint.fmpz_mat:
    """Divide an integer matrix by k, raising if any entry is not divisible."""
    num, den = (flint.fmpq_mat(a) / k).numer_denom()
    if int(den) != 1:
        raise ArithmeticError(f"matrix not divisible by {k}")
    return num


def hnf_rows(rows: flint.fmpz_mat) -> flint.fmpz_mat:
    """Hermite normal form with zero rows stripped."""
    h = rows.hnf()
    out = [r for r in h.tolist() if any(r)]
    return flint.fmpz_mat(out) if out else flint.fmpz_mat(0, rows.ncols())
