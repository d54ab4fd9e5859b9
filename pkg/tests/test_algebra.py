import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraccy.algebra import (
    BasedAlgebra,
    dual_bimodule,
    fingerprint,
    idempotent_truncation,
    jacobson_radical,
    replicate,
    slot_dual_bimodule,
    triangular_matrix,
)
from fraccy.radical import radical_of_matrix_algebra
from fraccy import linalg as la

from conftest import ALL_FIXTURES, algebra, replica


def permuted(A: BasedAlgebra, basis_perm, vertex_perm) -> BasedAlgebra:
    """Same algebra on a reordered basis and reordered vertex list (no designated radical)."""
    pi = np.asarray(basis_perm)
    inv = np.argsort(pi)
    vinv = np.argsort(vertex_perm)
    mult = A.mult[np.ix_(pi, pi, pi)]
    src = vinv[A.src[pi]]
    tgt = vinv[A.tgt[pi]]
    idem = [tuple(int(inv[i]) for i in A.idempotents[v]) for v in vertex_perm]
    return BasedAlgebra(A.p, mult, src, tgt, idem, name=A.name + "'")


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_structure_checks(name):
    A = algebra(name)
    assert A.check_associative()
    assert A.check_idempotents()
    assert A.check_radical()
    assert A.is_split_basic()


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_opposite_is_involution(name):
    A = algebra(name)
    assert A.op().op() is A
    assert A.op().check_associative()


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_designated_radical_matches_ronyai(name):
    A = algebra(name)
    R = jacobson_radical(A)
    assert R.shape[0] == len(A.radical_basis)
    ident = np.eye(A.dim, dtype=np.int64)[list(A.radical_basis)]
    assert la.rank(np.vstack([R, ident]), A.p) == R.shape[0]


@pytest.mark.parametrize("name, m", [(n, m) for n in ALL_FIXTURES for m in (1, 2)])
def test_replicate_shape(name, m):
    A = algebra(name)
    B = replica(name, m)
    assert B.dim == (m + 1) * A.dim + m * A.dim
    assert B.n_vertices == (m + 1) * A.n_vertices
    assert B.check_associative() and B.check_idempotents() and B.check_radical()


@pytest.mark.parametrize("name", ["loop", "a3nonlin", "d4rad2", "a2lin"])
@pytest.mark.parametrize("m", [1, 2])
def test_replicate_matches_triangular_recursion(name, m):
    A = algebra(name)
    R = replicate(A, m - 1)
    T = triangular_matrix(R, A, slot_dual_bimodule(R, A))
    assert T.check_associative()
    assert fingerprint(T).same_as(fingerprint(replica(name, m)))


def test_duplicated_loop_fingerprint():
    fp = fingerprint(replica("loop", 1))
    assert fp.dim == 15 and fp.n_simples == 4
    assert sum(map(sum, fp.ext_quiver)) == 5


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_dual_bimodule_checks(name):
    assert dual_bimodule(algebra(name)).check()


def test_truncation_of_replicate_recovers_copy():
    A = algebra("a3nonlin")
    B = replica("a3nonlin", 2)
    n = A.n_vertices
    C = idempotent_truncation(B, list(range(2 * n, 3 * n)))
    assert C.dim == A.dim and fingerprint(C).same_as(fingerprint(A))


def test_radical_of_upper_triangular_matrices():
    p = 5
    mats = []
    for i in range(3):
        for j in range(i, 3):
            E = np.zeros((3, 3), dtype=np.int64)
            E[i, j] = 1
            mats.append(E)
    R = radical_of_matrix_algebra(np.array(mats), p)
    assert R.shape[0] == 3


@pytest.mark.parametrize("name", ["loop", "d4rad2", "a5rel", "a3lin"])
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_fingerprint_invariant_under_basis_permutation(name, data):
    A = algebra(name)
    pi = data.draw(st.permutations(range(A.dim)))
    vp = data.draw(st.permutations(range(A.n_vertices)))
    B = permuted(A, pi, vp)
    assert B.check_associative()
    assert fingerprint(B).same_as(fingerprint(A))


def test_fingerprint_distinguishes_orientations():
    assert not fingerprint(algebra("a3lin")).same_as(fingerprint(algebra("a3nonlin")))
