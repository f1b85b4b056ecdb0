import random

from hypothesis import given
from hypothesis import strategies as st

from chevgrp.permgroup import StabilizerChain, inv, mul, perm_order


def closure_size(gens, n):
    idp = tuple(range(n))
    seen = {idp}
    queue = [idp]
    for x in queue:
        for g in gens:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


perms = st.integers(3, 7).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))).map(tuple), min_size=1, max_size=3))


@given(perms)
def test_order_matches_closure(gens):
    n = len(gens[0])
    G = closure_size(gens, n)
    chain = StabilizerChain(gens, n)
    assert chain.order() == len(G)
    for g in list(G)[:20]:
        assert chain.contains(g)


@given(perms, st.permutations(list(range(7))))
def test_membership_agrees_with_closure(gens, p):
    n = len(gens[0])
    p = tuple(x for x in p if x < n)
    if sorted(p) != list(range(n)):
        return
    assert chain_contains(gens, p) == (p in closure_size(gens, n))


def chain_contains(gens, p):
    return StabilizerChain(gens, len(gens[0])).contains(p)


def test_basic_ops():
    a = (1, 2, 0)
    assert mul(a, inv(a)) == (0, 1, 2)
    assert perm_order(a) == 3
    assert perm_order((1, 0, 3, 4, 2)) == 6


def test_symmetric_group_order():
    n = 8
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    assert StabilizerChain(gens, n).order() == 40320


def test_random_element_in_group():
    gens = [(1, 2, 0, 3), (0, 1, 3, 2)]
    ch = StabilizerChain(gens, 4)
    rng = random.Random(3)
    for _ in range(10):
        assert ch.contains(ch.random_element(rng))
