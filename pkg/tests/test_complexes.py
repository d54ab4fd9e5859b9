import numpy as np
import pytest

from fraccy.complexes import (
    BudgetExhausted,
    ModComplex,
    ProjComplex,
    build_key_sequence,
    cone_of_identity,
    minimize,
    nakayama_power,
    nakayama_powers,
    resolution_complex,
    resolve_minimal,
    stalk,
)
from fraccy.modules import injective, injective_sum, projective_resolution, simple

from conftest import ALL_FIXTURES, algebra

# fixtures with their certified l (from the oracle table in the fixture records)
KEY_CASES = [("loop", 2), ("a3nonlin", 2), ("d4rad2", 3), ("a3lin", 4), ("k", 2), ("a2lin", 3), ("loop", 4)]


def key_sequence_matches(A, ell, budget=80):
    ks = build_key_sequence(A, ell, budget)
    assert ks.total.check()
    aug = ks.augmented()
    assert aug.check()
    exact = aug.is_exact()
    mini = minimize(ks.total)
    res = projective_resolution(ks.target, 4 * ell + 8)
    assert res.complete
    ok = sorted(mini.degrees()) == sorted(-i for i, t in enumerate(res.tops) if t)
    ok = ok and all(sorted(mini.tops(-i)) == sorted(t) for i, t in enumerate(res.tops))
    return exact, ok, res.length


@pytest.mark.parametrize("name, ell", KEY_CASES)
def test_key_sequence_exact_and_minimal(name, ell):
    exact, ok, _ = key_sequence_matches(algebra(name), ell)
    assert exact and ok


def test_key_sequence_requires_ell_two():
    with pytest.raises(ValueError):
        build_key_sequence(algebra("loop"), 1, 10)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_cone_of_identity_minimizes_to_zero(name):
    A = algebra(name)
    tops = list(range(A.n_vertices))
    C = cone_of_identity(A, tops, 3)
    assert C.check() and C.is_acyclic()
    assert minimize(C).is_zero()


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_resolution_complex_homology(name):
    A = algebra(name)
    for v in range(A.n_vertices):
        res = projective_resolution(simple(A, v), 8)
        if not res.complete:
            continue
        C = resolution_complex(A, res)
        assert C.check()
        h = C.homology_dims()
        assert {n: d for n, d in h.items() if d} == {0: 1}


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_first_nakayama_power_resolves_injectives(name):
    A = algebra(name)
    for v in range(A.n_vertices):
        Q = nakayama_power(A, 1, 40, tops=[v])
        res = projective_resolution(injective(A, v), 40)
        if not res.complete:
            continue
        assert Q.degrees() == sorted(-i for i, t in enumerate(res.tops) if t)
        assert all(sorted(Q.tops(-i)) == sorted(t) for i, t in enumerate(res.tops))


def test_nakayama_of_selfinjective_is_a_permutation():
    for name in ["dualnumbers", "k"]:
        A = algebra(name)
        Q = nakayama_power(A, 1, 10)
        assert Q.degrees() == [0] and sorted(Q.tops(0)) == list(range(A.n_vertices))


def test_budget_exhaustion_is_reported():
    A = algebra("loop")
    with pytest.raises(BudgetExhausted):
        resolve_minimal(ModComplex(A, {0: simple(A, 0)}), 3)


def test_nakayama_chain_maps_compose():
    P = nakayama_powers(algebra("a3lin"), 4, 40)
    assert len(P.Q) == 4 and len(P.f) == 4
    assert all(Q.check() for Q in P.Q)
    # nu^4 of linear A3 is the shift [2] of the projectives
    assert P.Q[3].degrees() == [-2]


def test_stalk_complex():
    A = algebra("a2lin")
    S = stalk(A, [0, 1], 2)
    assert S.is_stalk() and S.lo == S.hi == 2
