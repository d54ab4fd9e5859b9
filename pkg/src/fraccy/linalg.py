"""Dense exact linear algebra over the prime field F_p.

Matrices are plain ``numpy.int64`` arrays with entries in ``[0, p)``; the
modulus travels as an explicit argument.  Pivoting is deterministic: the
first nonzero entry in column order.
"""

from __future__ import annotations

import numpy as np

# entries stay below 2**20 so that dot products of a few thousand terms fit in int64
MAX_PRIME = 1 << 20


def check_prime(p: int) -> int:
    p = int(p)
    if p < 2 or p > MAX_PRIME:
        raise ValueError(f"modulus must be a prime in [2, {MAX_PRIME}], got {p}")
    if any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"modulus {p} is not prime")
    return p


def fp(M, p: int) -> np.ndarray:
    return np.asarray(M, dtype=np.int64) % p


def as_rows(X, width: int) -> np.ndarray:
    """Reshape to ``(-1, width)``, also when ``width`` is zero."""
    X = np.asarray(X, dtype=np.int64)
    if width == 0:
        n = int(np.prod(X.shape[:-1])) if X.ndim >= 2 else 0
        return np.zeros((n, 0), dtype=np.int64)
    return X.reshape(-1, width)


def inv_scalar(a: int, p: int) -> int:
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("division by zero in F_p")
    return pow(a, -1, p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(*mats, p: int) -> np.ndarray:
    out = mats[0]
    for m in mats[1:]:
        out = (out @ m) % p
    return out


def rref(M, p: int) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form of ``M`` over F_p.

    Returns ``(R, pivots, rank)`` where ``R`` has the shape of ``M`` (zero rows
    at the bottom).
    """
    R = fp(M, p)
    if R.ndim != 2:
        R = R.reshape(R.shape[0] if R.size else 0, -1)
    R = R.copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        piv = int(R[r, c])
        if piv != 1:
            R[r] = (R[r] * inv_scalar(piv, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = (R[hit] - np.outer(col[hit], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots, r


def rank(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return rref(M, p)[2]


def row_basis(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Rows of the reduced echelon form spanning the row space of ``M``."""
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return zeros(0, M.shape[1] if M.ndim == 2 else 0), []
    R, piv, r = rref(M, p)
    return R[:r], piv


def kernel_basis(M, p: int) -> np.ndarray:
    """Columns form a basis of ``{x : M x = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    rows, cols = M.shape
    if rows == 0 or M.size == 0:
        return identity(cols)
    R, piv, r = rref(M, p)
    free = [c for c in range(cols) if c not in set(piv)]
    K = zeros(cols, len(free))
    for j, f in enumerate(free):
        K[f, j] = 1
        for i, c in enumerate(piv):
            K[c, j] = (-R[i, f]) % p
    return K


def left_kernel(M, p: int) -> np.ndarray:
    """Rows form a basis of ``{x : x M = 0}``."""
    M = np.asarray(M, dtype=np.int64)
    return kernel_basis(M.T, p).T.copy()


def solve(M, b, p: int) -> np.ndarray | None:
    """Some ``x`` with ``M x = b`` (free variables zero), or ``None``."""
    M = fp(M, p)
    b = fp(b, p).reshape(-1)
    if M.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {M.shape} vs {b.shape}")
    cols = M.shape[1]
    aug = np.concatenate([M.reshape(M.shape[0], cols), b[:, None]], axis=1)
    R, piv, r = rref(aug, p)
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, cols]
    return x


def solve_left(M, B, p: int) -> np.ndarray | None:
    """Some ``X`` with ``X M = B`` (row convention), or ``None``."""
    M = fp(M, p)
    B = fp(B, p)
    if B.ndim == 1:
        B = B[None, :]
    X = np.zeros((B.shape[0], M.shape[0]), dtype=np.int64)
    for i in range(B.shape[0]):
        x = solve(M.T, B[i], p)
        if x is None:
            return None
        X[i] = x
    return X


def inverse(M, p: int) -> np.ndarray:
    M = fp(M, p)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    if n == 0:
        return zeros(0, 0)
    R, piv, r = rref(np.concatenate([M, identity(n)], axis=1), p)
    if r < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular over F_p")
    return R[:, n:].copy()


def tensor_and_sum(A, B, p: int, mode: str = "kronecker") -> np.ndarray:
    A = fp(A, p)
    B = fp(B, p)
    if mode == "kronecker":
        return np.kron(A, B) % p
    if mode == "direct_sum":
        out = zeros(A.shape[0] + B.shape[0], A.shape[1] + B.shape[1])
        out[: A.shape[0], : A.shape[1]] = A
        out[A.shape[0]:, A.shape[1]:] = B
        return out
    raise ValueError(f"unknown mode {mode!r}")


def kron(A, B, p: int) -> np.ndarray:
    return tensor_and_sum(A, B, p, "kronecker")


def direct_sum(*blocks, p: int) -> np.ndarray:
    out = zeros(0, 0)
    for b in blocks:
        out = tensor_and_sum(out, b, p, "direct_sum")
    return out


def is_nilpotent(M, p: int) -> bool:
    M = fp(M, p)
    n = M.shape[0]
    if n == 0:
        return True
    P = M.copy()
    # rank strictly drops until zero for a nilpotent operator
    prev = n + 1
    while True:
        r = rank(P, p)
        if r == 0:
            return True
        if r == prev:
            return False
        prev = r
        P = (P @ M) % p


def matrix_power(M, k: int, modulus: int) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64) % modulus
    out = identity(M.shape[0])
    while k:
        if k & 1:
            out = (out @ M) % modulus
        M = (M @ M) % modulus
        k >>= 1
    return out
