"""Permutation groups: deterministic Schreier-Sims.

Permutations are tuples ``p`` with ``p[x]`` the image of ``x``.  Products are
read left to right, ``mul(a, b)`` applies ``a`` first.
"""

from __future__ import annotations

import random


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def mul(a, b):
    """a then b."""
    return tuple(b[x] for x in a)


def inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_order(a) -> int:
    from math import lcm
    seen = [False] * len(a)
    o = 1
    for i in range(len(a)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                k += 1
            o = lcm(o, k)
    return o


class StabilizerChain:
    """Base and strong generating set for the group generated by ``gens``."""

    def __init__(self, gens, degree: int | None = None, base_hint=()):
        gens = [tuple(g) for g in gens]
        self.degree = degree if degree is not None else len(gens[0])
        self.id = identity_perm(self.degree)
        gens = [g for g in gens if g != self.id]
        self.base: list[int] = []
        self.S: list[list] = []          # strong gens fixing base[:i]
        self.trans: list[dict] = []      # point -> u with u[base_i] = point
        self._hint = list(base_hint)
        for g in gens:
            self._ensure_moved(g)
        for i in range(len(self.base)):
            self.S[i] = [g for g in gens if all(g[b] == b for b in self.base[:i])]
            self._orbit(i)
        self._schreier_sims()

    # internals -------------------------------------------------------
    def _new_point(self, g):
        for b in self._hint:
            if b not in self.base and g[b] != b:
                return b
        for x in range(self.degree):
            if g[x] != x:
                return x
        raise ValueError("identity has no moved point")

    def _ensure_moved(self, g):
        if all(g[b] == b for b in self.base):
            self.base.append(self._new_point(g))
            self.S.append([])
            self.trans.append({})

    def _orbit(self, i):
        b = self.base[i]
        T = {b: self.id}
        queue = [b]
        for x in queue:
            u = T[x]
            for s in self.S[i]:
                y = s[x]
                if y not in T:
                    T[y] = mul(u, s)
                    queue.append(y)
        self.trans[i] = T

    def sift(self, g, start: int = 0):
        for i in range(start, len(self.base)):
            beta = g[self.base[i]]
            u = self.trans[i].get(beta)
            if u is None:
                return g, i
            g = mul(g, inv(u))
        return g, len(self.base)

    def _schreier_sims(self):
        i = len(self.base) - 1
        while i >= 0:
            restart = False
            T = self.trans[i]
            for beta, u in list(T.items()):
                for x in self.S[i]:
                    y = x[beta]
                    h = mul(mul(u, x), inv(T[y]))
                    if h == self.id:
                        continue
                    r, j = self.sift(h, i + 1)
                    if r != self.id:
                        if j == len(self.base):
                            self._ensure_moved(r)
                        for l in range(i + 1, j + 1):
                            self.S[l].append(r)
                            self._orbit(l)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # queries ----------------------------------------------------------
    def order(self) -> int:
        o = 1
        for T in self.trans:
            o *= len(T)
        return o

    def contains(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        r, j = self.sift(g)
        return j == len(self.base) and r == self.id

    def strong_generators(self):
        seen = []
        for lvl in self.S:
            for g in lvl:
                if g not in seen:
                    seen.append(g)
        return seen

    def random_element(self, rng: random.Random | None = None):
        rng = rng or random.Random(0)
        g = self.id
        for T in reversed(self.trans):
            g = mul(g, rng.choice(list(T.values())))
        return g
