import pytest
from hypothesis import given
from hypothesis import strategies as st

from chevgrp.weylmod import (build_minuscule, folded_invariants_dim, freudenthal,
                             highest_root_weight, weyl_dim, weyl_orbit)

RINGS = [0, 2, 3, 5, 7]

ADJOINT_DIMS = {"A2": 8, "B2": 10, "G2": 14, "B3": 21, "C3": 21, "D4": 28, "F4": 52,
                "E6": 78, "E7": 133, "E8": 248}
VMIN_DIMS = {"G2": 7, "F4": 26, "E6": 27, "E7": 56, "D4": 8}

MODULES = [(g, "adjoint") for g in ADJOINT_DIMS] + [(g, "vmin") for g in VMIN_DIMS]


@pytest.mark.parametrize("group,which", MODULES)
def test_dimension_and_weights(mod, group, which):
    m = mod(group, which, 0)
    expect = (ADJOINT_DIMS if which == "adjoint" else VMIN_DIMS)[group]
    assert m.dim == expect
    assert weyl_dim(m.rs, m.highest_weight) == expect
    assert m.weight_multiset() == freudenthal(m.rs, m.highest_weight)


# E8 over Q is checked on the Z-form in test_e8_relations_integral
SERRE_CASES = [(g, w, r) for g, w in MODULES for r in RINGS if (g, r) != ("E8", 0)]


@pytest.mark.parametrize("group,which,ring", SERRE_CASES)
def test_serre_relations(mod, group, which, ring):
    assert mod(group, which, ring).verify_relations() == []


def test_e8_relations_integral(mod):
    # over Q the identities are integral, so check them on the Z-form directly
    m = mod("E8", "adjoint", 0)
    rs = m.rs
    for i in range(1, 9):
        for j in range(1, 9):
            br = m.e(i) * m.e(-j) - m.e(-j) * m.e(i)
            if i == j:
                diag = [w[i - 1] for w in m.weights]
                assert all(br[k, k] == diag[k] for k in range(m.dim))
                assert sum(1 for k in range(m.dim) for l in range(m.dim)
                           if k != l and br[k, l] != 0) == 0
            else:
                assert br.is_zero()
                X = m.e(j)
                for _ in range(1 - rs.cartan[i - 1][j - 1]):
                    X = m.e(i) * X - X * m.e(i)
                assert X.is_zero()


@pytest.mark.parametrize("name,lam,dim", [("E6", (0, 0, 0, 0, 0, 1), 27), ("D4", (0, 0, 1, 0), 8),
                                          ("D4", (0, 0, 0, 1), 8), ("A2", (1, 0), 3),
                                          ("A2", (0, 1), 3)])
def test_other_minuscules(name, lam, dim):
    m = build_minuscule(name, lam)
    assert m.dim == dim == len(weyl_orbit(m.rs, lam))
    assert m.verify_relations() == []
    assert m.specialize(2).verify_relations() == []


def test_folding_has_one_dim_invariants():
    # the parent module restricted to the folded group has a 1-dimensional trivial summand
    assert folded_invariants_dim("F4") == 1
    assert folded_invariants_dim("G2") == 1


@pytest.mark.parametrize("group", ["G2", "F4", "E6"])
def test_highest_root_weight_is_adjoint(group, mod):
    assert mod(group, "adjoint", 0).highest_weight == highest_root_weight(mod(group, "adjoint", 0).rs)


@given(st.sampled_from([("G2", "vmin"), ("F4", "vmin"), ("B3", "adjoint")]),
       st.sampled_from(RINGS), st.data())
def test_root_subgroups_are_additive(args, ring, data):
    from tests.conftest import module
    m = module(*args, ring)
    N = m.rs.num_positive
    r = data.draw(st.integers(1, N)) * data.draw(st.sampled_from([1, -1]))
    t = data.draw(st.integers(-6, 6))
    u = data.draw(st.integers(-6, 6))
    assert m.x_matrix(r, t) @ m.x_matrix(r, u) == m.x_matrix(r, t + u)


@given(st.sampled_from(["G2", "F4", "E6"]), st.sampled_from([0, 5, 7]), st.data())
def test_torus_elements_multiply(group, ring, data):
    from tests.conftest import module
    m = module(group, "adjoint", ring)
    N = m.rs.num_positive
    r = data.draw(st.integers(1, N)) * data.draw(st.sampled_from([1, -1]))
    s = data.draw(st.sampled_from([2, 3, -1, 4]))
    t = data.draw(st.sampled_from([2, 3, -1, 6]))
    if ring and (s * t) % ring == 0:
        return
    assert m.h_matrix(r, s) @ m.h_matrix(r, t) == m.h_matrix(r, s * t)


def test_divided_powers_small_primes(mod):
    # x_a(1) in G2 needs e^(2), e^(3) on V_min; over F_2 and F_3 it must still be unipotent
    for ring in (2, 3):
        m = mod("G2", "vmin", ring)
        for r in m.rs.signed_indices():
            X = m.x_matrix(r, 1)
            D = X - m.identity()
            assert (D @ D @ D @ D).is_zero()
