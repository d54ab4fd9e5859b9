import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraccy import linalg as la
from fraccy.algebra import fingerprint
from fraccy.endo import (
    decompose,
    end_algebra,
    in_add,
    indecomposable_summands,
    is_indecomposable,
    is_isomorphic,
    iso_classes,
    minimal_polynomial,
    poly_eval,
    stable_end_algebra,
)
from fraccy.modules import (
    Module,
    direct_sum,
    dual_regular,
    injective,
    projective,
    regular,
    simple,
    tau_n,
)

from conftest import ALL_FIXTURES, algebra, random_module


def change_basis(M: Module, rng) -> Module:
    """Same module after a random invertible change of basis within each vertex block."""
    p = M.p
    T = np.zeros((M.dim, M.dim), dtype=np.int64)
    for blk in M.blocks:
        while blk.size:
            X = rng.integers(0, p, size=(blk.size, blk.size))
            if la.rank(X, p) == blk.size:
                T[np.ix_(blk, blk)] = X
                break
    Ti = la.inverse(T, p)
    act = np.einsum("ij,bjk,kl->bil", T, M.act, Ti) % p
    return Module(M.A, act, M.grading)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 5), st.data())
def test_minimal_polynomial_annihilates(p, n, data):
    X = np.array(data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)), dtype=np.int64)
    c = minimal_polynomial(X, p)
    assert not np.any(poly_eval(c, X, p))
    assert len(c) - 1 <= n


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_regular_module_decomposes_into_projectives(name):
    A = algebra(name)
    parts = indecomposable_summands(regular(A))
    assert len(parts) == A.n_vertices
    assert sorted(X.dim for X in parts) == sorted(projective(A, v).dim for v in range(A.n_vertices))
    assert all(is_indecomposable(X) for X in parts)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_decompose_spans_module(name, rng):
    A = algebra(name)
    for _ in range(4):
        M = direct_sum(A, [random_module(A, rng), random_module(A, rng)])
        Us = decompose(M)
        if M.dim:
            assert la.rank(np.vstack(Us), M.p) == M.dim
        assert sum(U.shape[0] for U in Us) == M.dim


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_isomorphism_survives_basis_change(name, rng):
    A = algebra(name)
    for _ in range(4):
        M = direct_sum(A, [random_module(A, rng), random_module(A, rng)])
        N = change_basis(M, rng)
        assert N.check()
        r = is_isomorphic(M, N)
        assert r.isomorphic


def test_non_isomorphic_with_equal_dimension_vectors():
    A = algebra("a3nonlin")
    # P1 + P3 and I2 + S2 share the dimension vector (1, 2, 1)
    X = direct_sum(A, [projective(A, 0), projective(A, 2)])
    Y = direct_sum(A, [injective(A, 1), simple(A, 1)])
    assert X.dim_vector == Y.dim_vector
    assert not is_isomorphic(X, Y).isomorphic


def test_iso_classes_and_in_add():
    A = algebra("a3lin")
    mods = [projective(A, 0), injective(A, 2), simple(A, 1), injective(A, 0)]
    classes = iso_classes(mods)
    assert sorted(map(sorted, classes)) == [[0, 1], [2], [3]]
    assert in_add(simple(A, 2), regular(A))
    assert not in_add(simple(A, 1), regular(A))


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_end_of_regular_module_is_the_algebra(name):
    A = algebra(name)
    E = end_algebra(regular(A)).algebra
    assert E.dim == A.dim
    assert E.check_associative()
    assert fingerprint(E).same_as(fingerprint(A))


def test_end_of_generator_cogenerator_for_loop():
    A = algebra("loop")
    E = end_algebra(direct_sum(A, [regular(A), dual_regular(A)])).algebra
    assert E.dim == 15 and E.n_vertices == 4
    assert E.radical_span.shape[0] == 11


def test_a5rel_stable_auslander_fingerprint():
    B = algebra("a5rel")
    DB = dual_regular(B)
    M = direct_sum(B, [DB, tau_n(DB, 2)])
    assert tau_n(DB, 2).dim_vector == [0, 0, 1, 2, 3]
    S = stable_end_algebra(M)
    fp = fingerprint(S)
    assert (fp.dim, fp.n_simples, fp.rad_dims, fp.acyclic) == (6, 3, [3, 1], True)
    assert fp.same_as(fingerprint(algebra("a3lin")))
