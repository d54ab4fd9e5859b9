import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from fraccy import linalg as la

PRIMES = [2, 3, 5, 7, 101]


@st.composite
def matrices(draw, max_side=7):
    p = draw(st.sampled_from(PRIMES))
    r = draw(st.integers(0, max_side))
    c = draw(st.integers(0, max_side))
    M = draw(arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))
    return M, p


def sympy_rank(M, p):
    if M.size == 0:
        return 0
    return DomainMatrix.from_list([[int(x) for x in row] for row in M], GF(p)).rank()


@pytest.mark.parametrize("p", [2, 3, 97, la.MAX_PRIME - 3])
def test_check_prime_accepts(p):
    if p == la.MAX_PRIME - 3:
        p = 1048573  # largest prime below 2^20
    assert la.check_prime(p) == p


@pytest.mark.parametrize("p", [0, 1, 4, 9, la.MAX_PRIME + 7])
def test_check_prime_rejects(p):
    with pytest.raises(ValueError):
        la.check_prime(p)


def test_inv_scalar():
    assert la.inv_scalar(2, 5) == 3
    with pytest.raises(ZeroDivisionError):
        la.inv_scalar(0, 5)


def test_rref_example():
    R, piv, r = la.rref([[2, 4, 1], [1, 2, 3]], 5)
    assert r == 1 and piv == [0]
    assert R[0].tolist() == [1, 2, 3]


def test_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        la.inverse([[1, 2], [2, 4]], 7)


def test_solve_inconsistent():
    assert la.solve([[1, 1], [1, 1]], [0, 1], 3) is None


def test_direct_sum_shape():
    D = la.direct_sum(np.ones((1, 2), dtype=np.int64), np.ones((2, 1), dtype=np.int64), p=3)
    assert D.shape == (3, 3) and D.sum() == 4


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_independent_oracle(mp):
    M, p = mp
    assert la.rank(M, p) == sympy_rank(M, p)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_idempotent(mp):
    M, p = mp
    R, piv, r = la.rref(M, p)
    R2, piv2, r2 = la.rref(R, p)
    assert np.array_equal(R, R2) and piv == piv2 and r == r2


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity(mp):
    M, p = mp
    K = la.kernel_basis(M, p)
    assert K.shape[1] + la.rank(M, p) == M.shape[1]
    if K.size:
        assert not np.any((M @ K) % p)
    L = la.left_kernel(M, p)
    assert L.shape[0] + la.rank(M, p) == M.shape[0]
    if L.size:
        assert not np.any((L @ M) % p)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.data())
def test_solve_soundness(mp, data):
    M, p = mp
    if M.shape[1] == 0:
        return
    x0 = data.draw(arrays(np.int64, M.shape[1], elements=st.integers(0, p - 1)))
    b = (M @ x0) % p
    x = la.solve(M, b, p)
    assert x is not None and np.array_equal((M @ x) % p, b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_kron_mixed_product(p, data):
    def mat(r, c):
        return data.draw(arrays(np.int64, (r, c), elements=st.integers(0, p - 1)))

    a, b, c, d, e, f = (data.draw(st.integers(1, 3)) for _ in range(6))
    A, C, B, D = mat(a, b), mat(b, c), mat(d, e), mat(e, f)
    lhs = (la.kron(A, B, p) @ la.kron(C, D, p)) % p
    rhs = la.kron((A @ C) % p, (B @ D) % p, p)
    assert np.array_equal(lhs, rhs)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 6), st.data())
def test_inverse_roundtrip(p, n, data):
    M = data.draw(arrays(np.int64, (n, n), elements=st.integers(0, p - 1)))
    if la.rank(M, p) < n:
        with pytest.raises(ZeroDivisionError):
            la.inverse(M, p)
        return
    assert np.array_equal((M @ la.inverse(M, p)) % p, np.eye(n, dtype=np.int64))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(1, 5), st.data())
def test_nilpotency_and_power(p, n, data):
    U = np.triu(data.draw(arrays(np.int64, (n, n), elements=st.integers(0, p - 1))), 1)
    assert la.is_nilpotent(U, p)
    assert not np.any(la.matrix_power(U, n, p))
    assert not la.is_nilpotent(np.eye(n, dtype=np.int64), p)
