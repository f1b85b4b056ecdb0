"""Integral highest-weight modules and word evaluation.

A ``RepModule`` stores integer matrices for the root elements e_a on a fixed
lattice basis of weight vectors.  Everything ring-specific (the exponentials
x_a(t), torus elements, word products) is computed lazily in the module's
coefficient ring, either Q (ring 0) or F_p.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

import flint

from .chevbasis import (GeneratorWord, StructureConstants, compute_structure_constants,
                        parse_word)
from .exact import QQ, ExactMatrix, check_ring, fmpz_divexact, fmpz_eye, hnf_rows, to_scalar
from .rootsys import RootSystem, build_root_system


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def _as_weight(rs: RootSystem, lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a dominant weight for {rs.name}")
    return lam


def fundamental_weight(rs: RootSystem, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i - 1 else 0 for k in range(rs.rank))


def highest_root_weight(rs: RootSystem) -> tuple[int, ...]:
    return rs.root_dynkin(rs.num_positive)


def weyl_dim(rs: RootSystem, lam) -> int:
    lam = _as_weight(rs, lam)
    num = den = 1
    for r in range(1, rs.num_positive + 1):
        cv = rs.coroot_coeffs(r)
        num *= sum((l + 1) * c for l, c in zip(lam, cv))
        den *= sum(cv)
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def _weight_gram(name: str):
    rs = build_root_system(name)
    At = flint.fmpq_mat([[rs.cartan[j][i] for j in range(rs.rank)] for i in range(rs.rank)])
    M = At.inv()
    G = [[Fraction(int(M[i, j].p), int(M[i, j].q)) * rs.simple_norms[j] / 2
          for j in range(rs.rank)] for i in range(rs.rank)]
    return G


def weight_inner(rs: RootSystem, mu, nu) -> Fraction:
    G = _weight_gram(rs.name)
    return sum(mu[i] * nu[j] * G[i][j] for i in range(rs.rank) for j in range(rs.rank)
               if mu[i] and nu[j])


def _simple_dynkin(rs):
    return [tuple(rs.cartan[j][i] for j in range(rs.rank)) for i in range(rs.rank)]


def dominant_conjugate(rs: RootSystem, mu) -> tuple[int, ...]:
    al = _simple_dynkin(rs)
    mu = list(mu)
    while True:
        for i in range(rs.rank):
            if mu[i] < 0:
                c = mu[i]
                mu = [m - c * a for m, a in zip(mu, al[i])]
                break
        else:
            return tuple(mu)


def weyl_orbit(rs: RootSystem, mu) -> list[tuple[int, ...]]:
    al = _simple_dynkin(rs)
    mu = tuple(mu)
    seen = {mu}
    order = [mu]
    for nu in order:
        for i in range(rs.rank):
            c = nu[i]
            if c:
                x = tuple(m - c * a for m, a in zip(nu, al[i]))
                if x not in seen:
                    seen.add(x)
                    order.append(x)
    return order


def freudenthal(rs: RootSystem, lam) -> Counter:
    """Weight multiset of V(lam), weights as Dynkin labels."""
    lam = _as_weight(rs, lam)
    pos = [rs.root_dynkin(r) for r in range(1, rs.num_positive + 1)]
    rho = (1,) * rs.rank
    # dominant weights below lam, with their depth
    depth = {lam: 0}
    order = [lam]
    for mu in order:
        for r, a in zip(range(1, rs.num_positive + 1), pos):
            nu = tuple(m - x for m, x in zip(mu, a))
            if min(nu) >= 0 and nu not in depth:
                depth[nu] = None
                order.append(nu)
    coeff_of = {}
    # depth = height of lam - mu in the root lattice
    # Dynkin labels of sum c_i alpha_i are A c
    Ainv = flint.fmpq_mat([list(r) for r in rs.cartan]).inv()
    for mu in order:
        diff = [l - m for l, m in zip(lam, mu)]
        c = [sum(Fraction(int(Ainv[i, j].p), int(Ainv[i, j].q)) * diff[j] for j in range(rs.rank))
             for i in range(rs.rank)]
        assert all(x.denominator == 1 and x >= 0 for x in c)
        coeff_of[mu] = sum(c)
    order.sort(key=lambda m: coeff_of[m])
    lr = tuple(l + 1 for l in lam)
    top = weight_inner(rs, lr, lr)
    mult = {lam: 1}

    def m_of(nu):
        return mult.get(dominant_conjugate(rs, nu), 0)

    for mu in order[1:]:
        s = Fraction(0)
        for a in pos:
            k = 1
            while True:
                nu = tuple(m + k * x for m, x in zip(mu, a))
                mm = m_of(nu)
                if not mm:
                    break
                s += mm * weight_inner(rs, nu, a)
                k += 1
        mr = tuple(m + 1 for m in mu)
        den = top - weight_inner(rs, mr, mr)
        val = 2 * s / den
        assert val.denominator == 1
        mult[mu] = int(val)
    out = Counter()
    for mu, m in mult.items():
        if m:
            for nu in weyl_orbit(rs, mu):
                out[nu] += m
    return out


# ---------------------------------------------------------------------------
# modules
# ---------------------------------------------------------------------------

class RepModule:
    """A lattice with an integral action of the Chevalley basis root elements."""

    def __init__(self, sc: StructureConstants, weights, e_simple, f_simple,
                 provenance: str, highest_weight, ring: int = QQ,
                 e_all: dict | None = None, lattice_basis=None):
        self.sc = sc
        self.rs = sc.rs
        self.weights = [tuple(w) for w in weights]
        self.dim = len(self.weights)
        self.provenance = provenance
        self.highest_weight = tuple(highest_weight)
        self.ring = check_ring(ring)
        self.lattice_basis = lattice_basis
        # shared integral data
        self._e: dict = {}
        for i, m in enumerate(e_simple, start=1):
            self._e[i] = m
        for i, m in enumerate(f_simple, start=1):
            self._e[-i] = m
        if e_all:
            self._e.update(e_all)
        self._dp: dict = {}
        self._ring_cache: dict = {}

    # integral data -------------------------------------------------------
    def e(self, r: int) -> flint.fmpz_mat:
        """Integer matrix of e_r (root element for signed index r)."""
        m = self._e.get(r)
        if m is not None:
            return m
        rs = self.rs
        c = rs.coeffs(r)
        sgn = 1 if r > 0 else -1
        for i in range(1, rs.rank + 1):
            rest = list(c)
            rest[i - 1] -= sgn
            b = rs.index_of(rest)
            if b is not None:
                s = sgn * i
                n = self.sc(s, b)
                es, eb = self.e(s), self.e(b)
                m = fmpz_divexact(es * eb - eb * es, n)
                self._e[r] = m
                return m
        raise AssertionError(f"no decomposition for root {r}")

    def divided_powers(self, r: int) -> list:
        dp = self._dp.get(r)
        if dp is None:
            E = self.e(r)
            dp = []
            cur = E
            k = 1
            while not cur.is_zero():
                dp.append(cur)
                k += 1
                if k > 6:
                    raise AssertionError("root element not nilpotent of small order")
                cur = fmpz_divexact(cur * E, k)
            self._dp[r] = dp
        return dp

    def all_roots(self):
        return self.rs.signed_indices()

    def specialize(self, ring: int) -> "RepModule":
        ring = check_ring(ring)
        m = RepModule.__new__(RepModule)
        m.__dict__.update(self.__dict__)
        m.ring = ring
        m._e = self._e            # shared integral caches
        m._dp = self._dp
        m._ring_cache = {}
        return m

    # ring matrices -------------------------------------------------------
    def identity(self) -> ExactMatrix:
        return ExactMatrix.identity(self.dim, self.ring)

    def e_matrix(self, r: int, k: int = 1) -> ExactMatrix:
        key = ("e", r, k)
        M = self._ring_cache.get(key)
        if M is None:
            dp = self.divided_powers(r)
            if k > len(dp):
                M = ExactMatrix.from_fmpz(flint.fmpz_mat(self.dim, self.dim), self.ring)
            else:
                M = ExactMatrix.from_fmpz(dp[k - 1], self.ring)
            self._ring_cache[key] = M
        return M

    def h_cartan_matrix(self, i: int) -> ExactMatrix:
        """Lie algebra element h_i acting diagonally by <mu, alpha_i^vee>."""
        return ExactMatrix.diagonal([to_scalar(w[i - 1], self.ring) for w in self.weights], self.ring)

    def x_matrix(self, r: int, c) -> ExactMatrix:
        c = Fraction(c)
        key = ("x", r, c)
        M = self._ring_cache.get(key)
        if M is None:
            acc = flint.fmpq_mat(fmpz_eye(self.dim)) if self.ring == QQ else None
            if self.ring == QQ:
                for k, D in enumerate(self.divided_powers(r), start=1):
                    acc = acc + flint.fmpq_mat(D) * flint.fmpq(c.numerator ** k, c.denominator ** k)
                M = ExactMatrix(acc, QQ)
            else:
                p = self.ring
                cs = to_scalar(c, p)
                acc = flint.nmod_mat(fmpz_eye(self.dim), p)
                pw = flint.nmod(1, p)
                for D in self.divided_powers(r):
                    pw = pw * cs
                    acc = acc + flint.nmod_mat(D, p) * pw
                M = ExactMatrix(acc, p)
            if len(self._ring_cache) < 4096:
                self._ring_cache[key] = M
        return M

    def h_matrix(self, r: int, c) -> ExactMatrix:
        c = Fraction(c)
        cv = self.rs.coroot_coeffs(r)
        t = to_scalar(c, self.ring)
        if int(t == 0):
            raise ZeroDivisionError("h-coefficient must be invertible")
        entries = []
        for w in self.weights:
            k = sum(a * b for a, b in zip(w, cv))
            entries.append(t ** k if k >= 0 else (1 / t) ** (-k))
        return ExactMatrix.diagonal(entries, self.ring)

    def n_matrix(self, r: int) -> ExactMatrix:
        key = ("n", r)
        M = self._ring_cache.get(key)
        if M is None:
            M = self.x_matrix(r, 1) @ self.x_matrix(-r, -1) @ self.x_matrix(r, 1)
            self._ring_cache[key] = M
        return M

    def token_matrix(self, t) -> ExactMatrix:
        if t.kind == "x":
            return self.x_matrix(t.index, t.coeff)
        if t.kind == "h":
            return self.h_matrix(t.index, t.coeff)
        return self.n_matrix(t.index)

    def evaluate(self, w) -> ExactMatrix:
        if isinstance(w, str):
            w = parse_word(w)
        w.validate(self.rs)
        M = None
        for t in w.tokens:
            T = self.token_matrix(t)
            M = T if M is None else M @ T
        return self.identity() if M is None else M

    # checks --------------------------------------------------------------
    def weight_multiset(self) -> Counter:
        return Counter(self.weights)

    def verify_relations(self, ring: int | None = None) -> list[str]:
        """Serre relations and [e_i, f_j] = delta_ij h_i; returns failures."""
        m = self if ring is None or ring == self.ring else self.specialize(ring)
        rs = m.rs
        bad = []
        for i in range(1, rs.rank + 1):
            ei, fi = m.e_matrix(i), m.e_matrix(-i)
            for j in range(1, rs.rank + 1):
                ej, fj = m.e_matrix(j), m.e_matrix(-j)
                br = ei @ fj - fj @ ei
                want = m.h_cartan_matrix(i) if i == j else ExactMatrix.from_fmpz(
                    flint.fmpz_mat(m.dim, m.dim), m.ring)
                if br != want:
                    bad.append(f"[e{i},f{j}]")
                if i != j:
                    for X0, Y in ((ej, ei), (fj, fi)):
                        X = X0
                        for _ in range(1 - rs.cartan[i - 1][j - 1]):
                            X = Y @ X - X @ Y
                        if not X.is_zero():
                            bad.append(f"serre({i},{j})")
                hi = m.h_cartan_matrix(i)
                # [h_i, e_j] = <alpha_j, alpha_i^vee> e_j
                if hi @ ej - ej @ hi != ej * rs.cartan[i - 1][j - 1]:
                    bad.append(f"[h{i},e{j}]")
        return bad

    def __repr__(self):
        tag = "QQ" if self.ring == QQ else f"GF({self.ring})"
        return f"RepModule({self.rs.name}, {self.provenance}, dim={self.dim}, {tag})"


def specialize(m: RepModule, ring: int) -> RepModule:
    return m.specialize(ring)


def evaluate_word(m: RepModule, w) -> ExactMatrix:
    return m.evaluate(w)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def _sparse(dim, entries) -> flint.fmpz_mat:
    M = flint.fmpz_mat(dim, dim)
    for (i, j), v in entries.items():
        if v:
            M[i, j] = v
    return M


@lru_cache(maxsize=None)
def _adjoint(name: str) -> RepModule:
    sc = compute_structure_constants(name)
    rs = sc.rs
    N, l = rs.num_positive, rs.rank
    # basis: e_-N .. e_-1, h_1 .. h_l, e_1 .. e_N
    def pos(r):
        return r + N if r < 0 else N + l + r - 1

    def hpos(k):
        return N + k - 1

    weights = [None] * (2 * N + l)
    for r in rs.signed_indices():
        weights[pos(r)] = rs.root_dynkin(r)
    for k in range(1, l + 1):
        weights[hpos(k)] = (0,) * l
    e_all = {}
    for a in rs.signed_indices():
        ent = {}
        for b in rs.signed_indices():
            if b == -a:
                for k, v in enumerate(rs.coroot_coeffs(a), start=1):
                    ent[(hpos(k), pos(b))] = v
            else:
                v = sc(a, b)
                if v:
                    ent[(pos(sc.sum_index(a, b)), pos(b))] = v
        for k in range(1, l + 1):
            ent[(pos(a), hpos(k))] = -rs.pairing(a, k)
        e_all[a] = _sparse(2 * N + l, ent)
    es = [e_all[i] for i in range(1, l + 1)]
    fs = [e_all[-i] for i in range(1, l + 1)]
    return RepModule(sc, weights, es, fs, "adjoint", highest_root_weight(rs), QQ, e_all=e_all)


def build_adjoint(sc_or_rs, ring: int = QQ) -> RepModule:
    if isinstance(sc_or_rs, StructureConstants):
        name = sc_or_rs.rs.name
    elif isinstance(sc_or_rs, RootSystem):
        name = sc_or_rs.name
    else:
        name = build_root_system(sc_or_rs).name
    m = _adjoint(name)
    return m if ring == QQ else m.specialize(ring)


def _minuscule_data(rs: RootSystem, lam):
    orbit = weyl_orbit(rs, lam)
    if any(abs(x) > 1 for mu in orbit for x in mu):
        raise ValueError(f"{lam} is not minuscule for {rs.name}")
    al = _simple_dynkin(rs)
    pos = {mu: k for k, mu in enumerate(orbit)}
    dim = len(orbit)
    es, fs = [], []
    for i in range(rs.rank):
        e_ent, f_ent = {}, {}
        for mu, k in pos.items():
            if mu[i] == 1:
                nu = tuple(m - a for m, a in zip(mu, al[i]))
                f_ent[(pos[nu], k)] = 1
            elif mu[i] == -1:
                nu = tuple(m + a for m, a in zip(mu, al[i]))
                e_ent[(pos[nu], k)] = 1
        es.append(_sparse(dim, e_ent))
        fs.append(_sparse(dim, f_ent))
    return orbit, es, fs


@lru_cache(maxsize=None)
def _minuscule(name: str, lam: tuple) -> RepModule:
    sc = compute_structure_constants(name)
    rs = sc.rs
    lam = _as_weight(rs, lam)
    orbit, es, fs = _minuscule_data(rs, lam)
    m = RepModule(sc, orbit, es, fs, "minuscule", lam, QQ)
    bad = m.verify_relations()
    if bad:
        raise AssertionError(f"minuscule action fails relations: {bad[:5]}")
    return m


def build_minuscule(rs, lam, ring: int = QQ) -> RepModule:
    name = rs.name if isinstance(rs, RootSystem) else build_root_system(rs).name
    m = _minuscule(name, tuple(lam))
    return m if ring == QQ else m.specialize(ring)


# folding ------------------------------------------------------------------

FOLDINGS = {
    # target: (parent type, parent highest weight, orbit of parent simple roots per target simple root)
    "F4": ("E6", (1, 0, 0, 0, 0, 0), ((2,), (4,), (3, 5), (1, 6))),
    "G2": ("D4", (1, 0, 0, 0), ((1, 3, 4), (2,))),
}


def _folded_generators(target: str):
    parent_name, plam, orbits = FOLDINGS[target]
    parent = build_minuscule(parent_name, plam)
    es, fs = [], []
    for orb in orbits:
        E = flint.fmpz_mat(parent.dim, parent.dim)
        F = flint.fmpz_mat(parent.dim, parent.dim)
        for j in orb:
            E += parent.e(j)
            F += parent.e(-j)
        es.append(E)
        fs.append(F)
    return parent, es, fs


def folded_invariants_dim(target: str) -> int:
    """Dimension over Q of the subspace of the parent killed by the folded algebra."""
    parent, es, fs = _folded_generators(target)
    stack = flint.fmpq_mat([list(r) for M in es + fs for r in M.tolist()])
    return parent.dim - stack.rank()


@lru_cache(maxsize=None)
def _folded(target: str) -> RepModule:
    parent, es, fs = _folded_generators(target)
    sc = compute_structure_constants(target)
    rs = sc.rs
    orbits = FOLDINGS[target][2]
    # weights of the parent basis as target weights
    tw = [tuple(sum(mu[j - 1] for j in orb) for orb in orbits) for mu in parent.weights]
    big = RepModule(sc, tw, es, fs, f"folded-parent({parent.rs.name})", (), QQ)
    ops = []
    for i in range(1, rs.rank + 1):
        for r in (i, -i):
            ops.extend(big.divided_powers(r)[:3])
    # lattice generated by the highest weight vector, rows are vectors
    v = [0] * parent.dim
    v[0] = 1                      # parent highest weight vector
    L = flint.fmpz_mat([v])
    for _ in range(200):
        rows = [list(r) for r in L.tolist()]
        for D in ops:
            rows.extend(list(r) for r in (L * D.transpose()).tolist())
        L2 = hnf_rows(flint.fmpz_mat(rows))
        if L2 == L:
            break
        L = L2
    else:
        raise AssertionError("lattice saturation did not stabilise")
    basis = [list(r) for r in L.tolist()]
    d = len(basis)
    weights = []
    for b in basis:
        supp = {tw[k] for k, x in enumerate(b) if x}
        if len(supp) != 1:
            raise AssertionError("lattice basis vector is not a weight vector")
        weights.append(supp.pop())
    B = L.transpose()                               # parent_dim x d
    piv = [next(k for k, x in enumerate(b) if x) for b in basis]
    BP = flint.fmpq_mat([[B[p, j] for j in range(d)] for p in piv])
    BPinv = BP.inv()

    def restrict(X):
        XB = X * B
        Y = BPinv * flint.fmpq_mat([[XB[p, j] for j in range(d)] for p in piv])
        num, den = Y.numer_denom()
        if int(den) != 1 or B * num != XB:
            raise AssertionError("operator does not preserve the lattice")
        return num

    e_r = [restrict(E) for E in es]
    f_r = [restrict(F) for F in fs]
    hw = FOLDINGS_HW[target]
    m = RepModule(sc, weights, e_r, f_r, f"folded({parent.rs.name})", hw, QQ,
                  lattice_basis=B)
    bad = m.verify_relations()
    if bad:
        raise AssertionError(f"folded module fails relations: {bad[:5]}")
    return m


FOLDINGS_HW = {"F4": (0, 0, 0, 1), "G2": (1, 0)}


def build_folded(target: str, ring: int = QQ) -> RepModule:
    if target not in FOLDINGS:
        raise ValueError(f"no folding construction for {target}")
    m = _folded(target)
    return m if ring == QQ else m.specialize(ring)


# V_min and natural modules --------------------------------------------------

VMIN = {
    "G2": ("folded", None),
    "F4": ("folded", None),
    "E6": ("minuscule", (1, 0, 0, 0, 0, 0)),
    "E7": ("minuscule", (0, 0, 0, 0, 0, 0, 1)),
    "D4": ("minuscule", (1, 0, 0, 0)),
}


def build_vmin(group: str, ring: int = QQ) -> RepModule:
    """Minimal module: 7, 26, 27, 56 for G2, F4, E6, E7; natural 8 for D4."""
    group = build_root_system(group).name
    if group not in VMIN:
        raise ValueError(f"no minimal module for {group} (adjoint only)")
    kind, lam = VMIN[group]
    if kind == "folded":
        return build_folded(group, ring)
    return build_minuscule(group, lam, ring)


def build_module(group: str, which: str, ring: int = QQ) -> RepModule:
    which = which.lower()
    if which == "adjoint":
        return build_adjoint(group, ring)
    if which in ("vmin", "natural"):
        return build_vmin(group, ring)
    raise ValueError(f"unknown module selector {which!r}")
