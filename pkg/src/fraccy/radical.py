"""Jacobson radical of a matrix algebra over GF(p) (trace-form filtration).

For a matrix algebra of degree ``n`` the radical is ``I_l`` with
``l = floor(log_p n)``, where ``I_{-1}`` is the whole algebra and
``I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}``, ``g_i(x)`` being the
integer trace of ``lift(x)^(p^i)`` modulo ``p^(i+1)``, divided by ``p^i``.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la

_CHUNK = 2_000_000  # entries per batched product


def _batched_power(X: np.ndarray, e: int, mod: int) -> np.ndarray:
    result = None
    base = X % mod
    while e:
        if e & 1:
            result = base if result is None else np.matmul(result, base) % mod
        e >>= 1
        if e:
            base = np.matmul(base, base) % mod
    return result


def _g_matrix(cands: np.ndarray, mats: np.ndarray, p: int, i: int) -> np.ndarray:
    """``G[k, j] = g_i(cands[k] @ mats[j])`` for stacked matrices."""
    K, n = cands.shape[0], cands.shape[1]
    J = mats.shape[0]
    G = np.zeros((K, J), dtype=np.int64)
    if i == 0:
        # trace form: Tr(XY) = sum(X * Y^T)
        flatX = cands.reshape(K, -1)
        flatY = mats.transpose(0, 2, 1).reshape(J, -1)
        return (flatX @ flatY.T) % p
    mod = p ** (i + 1)
    e = p**i
    per = max(1, _CHUNK // max(1, n * n))
    pairs = [(k, j) for k in range(K) for j in range(J)]
    for start in range(0, len(pairs), per):
        chunk = pairs[start : start + per]
        ks = np.array([c[0] for c in chunk])
        js = np.array([c[1] for c in chunk])
        prod = np.matmul(cands[ks], mats[js]) % p
        powd = _batched_power(prod, e, mod)
        tr = np.trace(powd, axis1=1, axis2=2) % mod
        if np.any(tr % e):
            raise ArithmeticError("trace power not divisible by p^i; input is not closed under products")
        G[ks, js] = (tr // e) % p
    return G


def radical_of_matrix_algebra(mats: np.ndarray, p: int) -> np.ndarray:
    """Coefficient rows (w.r.t. the given matrices) spanning the radical.

    ``mats`` has shape (d, n, n) and must span an algebra closed under
    matrix products (a faithful representation of the algebra).
    """
    mats = la.fp(mats, p)
    d = mats.shape[0]
    if d == 0:
        return np.zeros((0, 0), dtype=np.int64)
    n = mats.shape[1]
    levels = 0
    while p ** (levels + 1) <= n:
        levels += 1
    C = np.eye(d, dtype=np.int64)
    for i in range(levels + 1):
        if C.shape[0] == 0:
            break
        cands = np.tensordot(C, mats, axes=(1, 0)) % p
        G = _g_matrix(cands, mats, p, i)
        Y = la.left_kernel(G, p)
        C = (Y @ C) % p
        C = la.row_basis(C, p)[0]
    return C
