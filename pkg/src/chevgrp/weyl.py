"""Weyl groups as permutations of the signed roots.

Point ``k`` of a permutation stands for the root with signed index ``k+1``
(for ``k < N``) or ``-(k-N+1)``.  ``WeylElem.perm[k]`` is the point of the
image root.  Composition follows functions: ``compose(w, v)`` applies ``v``
first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import flint

from .exact import QQ, ExactMatrix
from .permgroup import StabilizerChain, inv, perm_order
from .rootsys import RootSystem, build_root_system, dynkin_symmetry

# product of the degrees of the basic invariants
_ORDER_FORMULA = {
    "G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600, "D4": 192,
}


def weyl_group_order_formula(rs: RootSystem) -> int:
    from math import factorial
    if rs.name in _ORDER_FORMULA:
        return _ORDER_FORMULA[rs.name]
    n = rs.rank
    if rs.letter == "A":
        return factorial(n + 1)
    if rs.letter in "BC":
        return 2 ** n * factorial(n)
    if rs.letter == "D":
        return 2 ** (n - 1) * factorial(n)
    raise ValueError(rs.name)


@dataclass(frozen=True)
class WeylElem:
    perm: tuple[int, ...]
    word: tuple[int, ...] | None = field(default=None, compare=False, hash=False)


def _pt(rs: RootSystem, r: int) -> int:
    N = rs.num_positive
    return r - 1 if r > 0 else N - r - 1


def _root(rs: RootSystem, k: int) -> int:
    N = rs.num_positive
    return k + 1 if k < N else -(k - N + 1)


class WeylGroup:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.N = rs.num_positive
        self.degree = 2 * self.N
        self.simple = [self._reflection(i) for i in range(1, rs.rank + 1)]
        self.identity = WeylElem(tuple(range(self.degree)), ())
        self.negation = WeylElem(tuple(_pt(rs, -_root(rs, k)) for k in range(self.degree)))

    def _reflection(self, i: int) -> WeylElem:
        rs = self.rs
        ai = rs.coeffs(i)
        perm = []
        for k in range(self.degree):
            r = _root(rs, k)
            c = rs.coeffs(r)
            p = rs.pairing(r, i)
            perm.append(_pt(rs, rs.index_of(tuple(x - p * y for x, y in zip(c, ai)))))
        return WeylElem(tuple(perm), (i,))

    # basic operations ------------------------------------------------------
    def act(self, w: WeylElem, r: int) -> int:
        return _root(self.rs, w.perm[_pt(self.rs, r)])

    def compose(self, w: WeylElem, v: WeylElem) -> WeylElem:
        word = None if w.word is None or v.word is None else w.word + v.word
        return WeylElem(tuple(w.perm[x] for x in v.perm), word)

    def inverse(self, w: WeylElem) -> WeylElem:
        word = None if w.word is None else tuple(reversed(w.word))
        return WeylElem(inv(w.perm), word)

    def from_word(self, word) -> WeylElem:
        w = self.identity
        for i in word:
            w = self.compose(w, self.simple[i - 1])
        return w

    def reflection(self, r: int) -> WeylElem:
        """s_r for any root index r."""
        rs = self.rs
        a = rs.coeffs(r)
        perm = []
        for k in range(self.degree):
            b = _root(rs, k)
            p = rs.pairing(b, r)
            perm.append(_pt(rs, rs.index_of(tuple(x - p * y for x, y in zip(rs.coeffs(b), a)))))
        return WeylElem(tuple(perm))

    def order(self, w: WeylElem) -> int:
        return perm_order(w.perm)

    def lattice_matrix(self, w: WeylElem) -> ExactMatrix:
        rs = self.rs
        cols = [rs.coeffs(self.act(w, j)) for j in range(1, rs.rank + 1)]
        return ExactMatrix.from_rows([[cols[j][i] for j in range(rs.rank)]
                                      for i in range(rs.rank)], QQ)

    def lattice_fmpz(self, w: WeylElem) -> flint.fmpz_mat:
        rs = self.rs
        cols = [rs.coeffs(self.act(w, j)) for j in range(1, rs.rank + 1)]
        return flint.fmpz_mat([[cols[j][i] for j in range(rs.rank)] for i in range(rs.rank)])

    def charpoly(self, w: WeylElem) -> flint.fmpz_poly:
        return self.lattice_fmpz(w).charpoly()

    def length(self, w: WeylElem) -> int:
        return sum(1 for r in range(1, self.N + 1) if self.act(w, r) < 0)

    def longest_element(self) -> WeylElem:
        w = self.identity
        changed = True
        while changed:
            changed = False
            for i in range(1, self.rs.rank + 1):
                if self.act(w, i) > 0:
                    w = self.compose(w, self.simple[i - 1])
                    changed = True
        return w

    def coxeter_element(self) -> WeylElem:
        return self.from_word(range(1, self.rs.rank + 1))

    def reduced_word(self, w: WeylElem) -> tuple[int, ...]:
        """Reduced expression, found by peeling off left descents."""
        out = []
        cur = w
        while True:
            for i in range(1, self.rs.rank + 1):
                # left descent: w^-1(alpha_i) < 0
                if self.act(self.inverse(cur), i) < 0:
                    out.append(i)
                    cur = self.compose(self.simple[i - 1], cur)
                    break
            else:
                return tuple(out)


@lru_cache(maxsize=None)
def weyl_group(rs) -> WeylGroup:
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    return WeylGroup(rs)


def act(w: WeylElem, r: int, rs: RootSystem) -> int:
    return weyl_group(rs).act(w, r)


def compose(w: WeylElem, v: WeylElem, rs: RootSystem) -> WeylElem:
    return weyl_group(rs).compose(w, v)


def lattice_matrix(w: WeylElem, rs: RootSystem) -> ExactMatrix:
    return weyl_group(rs).lattice_matrix(w)


# enumeration ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _enumerate(name: str) -> tuple[WeylElem, ...]:
    W = weyl_group(build_root_system(name))
    seen = {W.identity.perm: W.identity}
    order = [W.identity]
    for w in order:
        for i, s in enumerate(W.simple, start=1):
            p = tuple(w.perm[x] for x in s.perm)
            if p not in seen:
                e = WeylElem(p, w.word + (i,))
                seen[p] = e
                order.append(e)
    return tuple(order)


def enumerate_group(rs) -> list[WeylElem]:
    """All elements in breadth-first order; words are reduced.  Rank <= 4."""
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    if rs.rank > 4:
        raise ValueError("enumerate_group is limited to rank <= 4; use stabilizer_chain")
    return list(_enumerate(rs.name))


@lru_cache(maxsize=None)
def _chain(name: str) -> StabilizerChain:
    W = weyl_group(build_root_system(name))
    hint = [W.degree // 2 - 1]            # the highest root first
    return StabilizerChain([s.perm for s in W.simple], W.degree, base_hint=hint)


def stabilizer_chain(rs) -> StabilizerChain:
    name = rs.name if isinstance(rs, RootSystem) else build_root_system(rs).name
    return _chain(name)


# twists ---------------------------------------------------------------------

@dataclass(frozen=True)
class TwistSpec:
    kind: str                         # "untwisted", "graph" or "suzuki-ree"
    induced_map: tuple[int, ...]      # root permutation F with sigma(w) = F w F^-1
    simple_perm: tuple[int, ...]      # image of each simple index
    name: str = "none"


def make_twist(rs, kind: str = "none") -> TwistSpec:
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    W = weyl_group(rs)
    k = (kind or "none").lower()
    if k in ("none", "untwisted", "1"):
        return TwistSpec("untwisted", tuple(range(W.degree)), tuple(range(1, rs.rank + 1)), "none")
    if k in ("tau", "graph", "triality", "τ"):
        sym = dynkin_symmetry(rs.name, "tau")
        tag = "graph"
    elif k in ("tau2",):
        sym = dynkin_symmetry(rs.name, "tau2")
        tag = "graph"
    elif k in ("psi", "ψ", "suzuki-ree"):
        sym = dynkin_symmetry(rs.name, "psi")
        tag = "suzuki-ree"
    else:
        raise ValueError(f"unknown twist {kind!r}")
    # F(alpha_i) = alpha_rho(i), F(s_j beta) = s_rho(j) F(beta)
    img = {}
    for i in range(1, rs.rank + 1):
        img[i] = sym.perm[i - 1]
    queue = list(range(1, rs.rank + 1))
    for b in queue:
        for j in range(1, rs.rank + 1):
            c = W.act(W.simple[j - 1], b)
            if c not in img:
                img[c] = W.act(W.simple[sym.perm[j - 1] - 1], img[b])
                queue.append(c)
    if len(img) != 2 * rs.num_positive:
        raise AssertionError("twist did not reach every root")
    perm = [0] * W.degree
    for r, s in img.items():
        perm[_pt(rs, r)] = _pt(rs, s)
    F = tuple(perm)
    # sanity: F conjugates reflections to reflections
    for j in range(1, rs.rank + 1):
        lhs = tuple(F[x] for x in W.simple[j - 1].perm)
        rhs = tuple(W.simple[sym.perm[j - 1] - 1].perm[x] for x in F)
        if lhs != rhs:
            raise AssertionError("twist does not normalise the reflections")
    return TwistSpec(tag, F, sym.perm, k)


def apply_twist(tw: TwistSpec, w: WeylElem) -> WeylElem:
    """sigma(w) = F w F^-1."""
    F = tw.induced_map
    Fi = inv(F)
    return WeylElem(tuple(F[w.perm[x]] for x in Fi))


# sigma classes --------------------------------------------------------------

@dataclass
class SigmaClassSet:
    classes: list            # (representative WeylElem, class size)
    group_order: int

    def __len__(self):
        return len(self.classes)

    def sizes(self):
        return [s for _, s in self.classes]


def _sigma_orbits(rs: RootSystem, tw: TwistSpec):
    W = weyl_group(rs)
    elems = enumerate_group(rs)
    by_perm = {e.perm: e for e in elems}
    sig = [apply_twist(tw, s) for s in W.simple]
    label = {}
    classes = []
    for e in elems:                       # BFS order: shortest reps first
        if e.perm in label:
            continue
        cid = len(classes)
        label[e.perm] = cid
        orbit = [e.perm]
        for x in orbit:
            for s, ss in zip(W.simple, sig):
                # s acts by x -> sigma(s) x s^-1
                y = tuple(ss.perm[x[s.perm[k]]] for k in range(W.degree))
                if y not in label:
                    label[y] = cid
                    orbit.append(y)
        classes.append((e, len(orbit)))
    return classes, label, by_perm


def sigma_classes(rs, twist: TwistSpec | str = "none") -> SigmaClassSet:
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    tw = twist if isinstance(twist, TwistSpec) else make_twist(rs, twist)
    classes, _, _ = _sigma_orbits(rs, tw)
    return SigmaClassSet(classes, len(enumerate_group(rs)))


def _sigma_conj(W, tw, g: WeylElem, x: WeylElem) -> WeylElem:
    """sigma(g)^-1 x g."""
    sg = apply_twist(tw, g)
    return W.compose(W.compose(W.inverse(sg), x), g)


@dataclass
class Centralizer:
    order: int
    generators: list


def sigma_centralizer(rs, w: WeylElem, twist: TwistSpec | str = "none",
                      max_orbit: int = 2_000_000) -> Centralizer:
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    tw = twist if isinstance(twist, TwistSpec) else make_twist(rs, twist)
    W = weyl_group(rs)
    if rs.rank <= 4:
        elems = enumerate_group(rs)
        C = [x for x in elems if _sigma_conj(W, tw, x, w).perm == w.perm]
        gens: list = []
        span = {W.identity.perm}
        for x in C:
            if x.perm not in span:
                gens.append(x)
                span = _closure([g.perm for g in gens], W.degree)
        return Centralizer(len(C), gens)
    # larger rank: orbit-stabiliser on the twisted-conjugation orbit
    sig = [apply_twist(tw, s) for s in W.simple]
    seen = {w.perm}
    queue = [w.perm]
    for x in queue:
        for s, ss in zip(W.simple, sig):
            y = tuple(ss.perm[x[s.perm[k]]] for k in range(W.degree))
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if len(seen) > max_orbit:
                    raise ValueError("sigma-class too large for orbit counting")
    order = weyl_group_order_formula(rs)
    assert order % len(seen) == 0
    return Centralizer(order // len(seen), [])


def _closure(gens, degree):
    idp = tuple(range(degree))
    seen = {idp}
    queue = [idp]
    for x in queue:
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def same_sigma_class(rs, x: WeylElem, y: WeylElem, twist: TwistSpec | str = "none",
                     max_orbit: int = 2_000_000):
    """Certificate g with sigma(g)^-1 x g = y, or None if y is not in the class of x."""
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    tw = twist if isinstance(twist, TwistSpec) else make_twist(rs, twist)
    W = weyl_group(rs)
    if tw.kind == "untwisted":
        if W.charpoly(x) != W.charpoly(y):
            return None
    sig = [apply_twist(tw, s) for s in W.simple]
    # track g_z with z = sigma(g_z) x g_z^-1
    parent = {x.perm: None}
    queue = [x.perm]
    found = x.perm == y.perm
    for z in queue:
        if found:
            break
        for i, (s, ss) in enumerate(zip(W.simple, sig)):
            u = tuple(ss.perm[z[s.perm[k]]] for k in range(W.degree))
            if u not in parent:
                parent[u] = (z, i)
                queue.append(u)
                if u == y.perm:
                    found = True
                    break
                if len(parent) > max_orbit:
                    raise ValueError("orbit cap exceeded")
    if not found:
        return None
    word = []
    z = y.perm
    while parent[z] is not None:
        z, i = parent[z]
        word.append(i + 1)
    # y = sigma(h) x h^-1 with h = s_{word[0]} ... s_{word[-1]}; g = h^-1
    h = W.from_word(word)
    g = W.inverse(h)
    assert _sigma_conj(W, tw, g, x).perm == y.perm
    return g


# tori -----------------------------------------------------------------------

def _twist_lattice(rs: RootSystem, tw: TwistSpec) -> flint.fmpz_mat:
    if tw.kind == "suzuki-ree":
        raise ValueError("torus orders for Suzuki-Ree twists are not integral polynomials in q")
    l = rs.rank
    M = flint.fmpz_mat(l, l)
    for j in range(l):
        M[tw.simple_perm[j] - 1, j] = 1
    return M


def torus_order_poly(rs, w: WeylElem, twist: TwistSpec | str = "none") -> flint.fmpz_poly:
    """|det(q F0 M_w - I)| as a polynomial in q with positive leading coefficient.

    F0 is the lattice matrix of F^-1, where sigma(w) = F w F^-1; with this choice
    sigma(g)^-1 x g and x give conjugate products F0 M_x, so the polynomial is a
    sigma-class invariant.
    """
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    tw = twist if isinstance(twist, TwistSpec) else make_twist(rs, twist)
    W = weyl_group(rs)
    F0 = _twist_lattice(rs, tw).transpose()      # permutation matrix: inverse = transpose
    A = F0 * W.lattice_fmpz(w)
    # det(qA - I) = det(A) * charpoly(A^-1)(q)
    Ainv = A.inv()
    num, den = Ainv.numer_denom() if hasattr(Ainv, "numer_denom") else (Ainv, 1)
    assert int(den) == 1
    p = num.charpoly() * int(A.det())
    if p.coeffs()[-1] < 0:
        p = -p
    return p


def torus_order(rs, w: WeylElem, twist: TwistSpec | str = "none", q: int = 2) -> int:
    if q < 2:
        raise ValueError("q must be at least 2")
    return abs(int(torus_order_poly(rs, w, twist)(q)))


def poly_str(p: flint.fmpz_poly, var: str = "q") -> str:
    """Render e.g. ``q^4 - q^2 + 1``."""
    terms = []
    cs = [int(c) for c in p.coeffs()]
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = str(mag) if mono == "" else (mono if mag == 1 else f"{mag}{mono}")
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def factor_str(p: flint.fmpz_poly, var: str = "q") -> str:
    """Factored form, e.g. ``(q^2 + 1)^2``."""
    c, facs = p.factor()
    c = int(c)
    parts = []
    for f, e in sorted(facs, key=lambda fe: (_deg(fe[0]), [int(c) for c in fe[0].coeffs()])):
        s = poly_str(f, var)
        s = s if s == var else f"({s})"
        parts.append(s if e == 1 else f"{s}^{e}")
    lead = "" if c == 1 else ("-" if c == -1 else str(c))
    return lead + "".join(parts) if parts else str(c)


def _deg(f) -> int:
    return len(f.coeffs()) - 1
