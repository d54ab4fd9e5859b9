"""Finite-dimensional algebras given by a basis and structure constants.

Every basis element ``b_i`` is homogeneous with respect to the designated
primitive idempotents: ``b_i = e_{src[i]} b_i e_{tgt[i]}``.  Vectors are
coefficient rows; ``mult[i, j, k]`` is the coefficient of ``b_k`` in
``b_i b_j``.
"""

from __future__ import annotations

import hashlib

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg as la
from .radical import radical_of_matrix_algebra


class AlgebraError(ValueError):
    pass


class BasedAlgebra:
    def __init__(
        self,
        p: int,
        mult,
        src: Sequence[int],
        tgt: Sequence[int],
        idempotents: Sequence[Sequence[int]],
        radical_basis: Sequence[int] | None = None,
        labels: Sequence[str] | None = None,
        name: str = "",
        meta: dict | None = None,
    ):
        self.p = la.check_prime(p)
        self.mult = la.fp(mult, self.p)
        self.dim = self.mult.shape[0]
        if self.mult.shape != (self.dim,) * 3:
            raise AlgebraError("structure constants must have shape (dim, dim, dim)")
        self.src = np.asarray(src, dtype=np.int64)
        self.tgt = np.asarray(tgt, dtype=np.int64)
        self.idempotents = [tuple(int(i) for i in e) for e in idempotents]
        self.radical_basis = None if radical_basis is None else tuple(sorted(int(i) for i in radical_basis))
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(self.dim)]
        self.name = name
        self.meta = dict(meta or {})
        self._op: BasedAlgebra | None = None

    def __repr__(self) -> str:
        return f"<BasedAlgebra {self.name or '?'} dim={self.dim} vertices={self.n_vertices} p={self.p}>"

    @property
    def n_vertices(self) -> int:
        return len(self.idempotents)

    # -- elements ---------------------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def idempotent(self, v: int) -> np.ndarray:
        e = self.zero()
        e[list(self.idempotents[v])] = 1
        return e

    def one(self) -> np.ndarray:
        return sum((self.idempotent(v) for v in range(self.n_vertices)), self.zero()) % self.p

    def multiply(self, x, y) -> np.ndarray:
        x = la.fp(x, self.p)
        y = la.fp(y, self.p)
        return (np.tensordot(x, np.tensordot(y, self.mult, axes=(0, 1)), axes=(0, 0))) % self.p

    def left_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y`` in row convention (``y @ L``)."""
        return np.tensordot(la.fp(x, self.p), self.mult, axes=(0, 0)) % self.p

    def right_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> y x`` in row convention."""
        return np.tensordot(la.fp(x, self.p), self.mult, axes=(0, 1)) % self.p

    @cached_property
    def idx_src(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.src == v) for v in range(self.n_vertices)]

    @cached_property
    def idx_tgt(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.tgt == v) for v in range(self.n_vertices)]

    def block(self, s: int, t: int) -> np.ndarray:
        return np.flatnonzero((self.src == s) & (self.tgt == t))

    @cached_property
    def vertex_units(self) -> list[int]:
        """Basis index of each primitive idempotent (requires singleton idempotents)."""
        out = []
        for e in self.idempotents:
            if len(e) != 1:
                raise AlgebraError("operation requires each idempotent to be a single basis element")
            out.append(e[0])
        return out

    # -- element matrices (maps between sums of indecomposable projectives) --

    def elem_compose(self, G: np.ndarray, F: np.ndarray) -> np.ndarray:
        """Composite ``g after f`` of element matrices: ``(GF)[s, c] = sum_r G[s, r] F[r, c]``."""
        if G.shape[1] == 0 or F.shape[1] == 0 or G.shape[0] == 0:
            return np.zeros((G.shape[0], F.shape[1], self.dim), dtype=np.int64)
        T = np.tensordot(G, self.mult, axes=(2, 0)) % self.p  # s r j k
        return np.einsum("srjk,rcj->sck", T, F) % self.p

    def elem_identity(self, tops: Sequence[int]) -> np.ndarray:
        n = len(tops)
        out = np.zeros((n, n, self.dim), dtype=np.int64)
        for k, v in enumerate(tops):
            out[k, k] = self.idempotent(v)
        return out

    # -- structure --------------------------------------------------------

    def op(self) -> "BasedAlgebra":
        if self._op is None:
            o = BasedAlgebra(
                self.p,
                self.mult.transpose(1, 0, 2),
                self.tgt,
                self.src,
                self.idempotents,
                self.radical_basis,
                self.labels,
                name=f"{self.name}^op" if self.name else "",
                meta={"opposite_of": self},
            )
            o._op = self
            self._op = o
        return self._op

    @cached_property
    def radical_span(self) -> np.ndarray:
        """Rows spanning the Jacobson radical (designated or computed)."""
        if self.radical_basis is not None:
            R = np.zeros((len(self.radical_basis), self.dim), dtype=np.int64)
            for r, i in enumerate(self.radical_basis):
                R[r, i] = 1
            return R
        return jacobson_radical(self)

    def is_split_basic(self) -> bool:
        return (
            self.radical_basis is not None
            and all(len(e) == 1 for e in self.idempotents)
            and len(self.radical_basis) + self.n_vertices == self.dim
        )

    def product_span(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Row basis of ``span{x y}`` for rows ``x`` of X and ``y`` of Y."""
        if X.shape[0] == 0 or Y.shape[0] == 0:
            return np.zeros((0, self.dim), dtype=np.int64)
        T = np.tensordot(X, self.mult, axes=(1, 0)) % self.p  # a j k
        P = np.einsum("ajk,bj->abk", T, Y) % self.p
        return la.row_basis(P.reshape(-1, self.dim), self.p)[0]

    @cached_property
    def radical_powers(self) -> list[np.ndarray]:
        """Row bases of rad, rad^2, ... up to (excluding) the zero power."""
        out = []
        R = la.row_basis(self.radical_span, self.p)[0]
        cur = R
        while cur.shape[0]:
            out.append(cur)
            cur = self.product_span(cur, R)
            if len(out) > self.dim + 1:
                raise AlgebraError("radical span is not nilpotent")
        return out

    @cached_property
    def generators(self) -> list[int]:
        """Radical basis elements spanning a complement of rad^2 (needs a designated radical)."""
        if self.radical_basis is None:
            raise AlgebraError("generators need a designated radical basis")
        pw = self.radical_powers
        rad2 = pw[1] if len(pw) > 1 else np.zeros((0, self.dim), dtype=np.int64)
        chosen: list[int] = []
        cur = rad2
        r0 = cur.shape[0]
        for i in self.radical_basis:
            cand = np.vstack([cur, self.basis_vector(i)[None, :]])
            r = la.rank(cand, self.p)
            if r > r0:
                chosen.append(i)
                cur, r0 = cand, r
        return chosen

    def check_associative(self) -> bool:
        M = self.mult
        if self.p * self.p * max(1, self.dim) < 2**52:
            M = M.astype(np.float64)  # exact in this range, and BLAS-backed
        lhs = np.tensordot(M, M, axes=(2, 0)) % self.p  # (ij)k
        rhs = np.tensordot(M, M, axes=(2, 1)).transpose(2, 0, 1, 3) % self.p  # i(jk)
        return bool(np.array_equal(lhs, rhs))

    def check_idempotents(self) -> bool:
        es = [self.idempotent(v) for v in range(self.n_vertices)]
        for a, ea in enumerate(es):
            for b, eb in enumerate(es):
                prod = self.multiply(ea, eb)
                want = ea if a == b else self.zero()
                if not np.array_equal(prod, want):
                    return False
        one = self.one()
        for i in range(self.dim):
            x = self.basis_vector(i)
            if not (np.array_equal(self.multiply(one, x), x) and np.array_equal(self.multiply(x, one), x)):
                return False
            es_ = self.idempotent(int(self.src[i]))
            et = self.idempotent(int(self.tgt[i]))
            if not np.array_equal(self.multiply(self.multiply(es_, x), et), x):
                return False
        return True

    def check_radical(self) -> bool:
        """Designated radical is a nilpotent two-sided ideal with semisimple quotient."""
        R = la.row_basis(self.radical_span, self.p)[0]
        r = R.shape[0]
        full = np.eye(self.dim, dtype=np.int64)
        for S in (self.product_span(R, full), self.product_span(full, R)):
            if la.rank(np.vstack([R, S]), self.p) != r:
                return False
        try:
            self.radical_powers
        except AlgebraError:
            return False
        computed = jacobson_radical(self, verify=False)
        return la.rank(np.vstack([R, computed]), self.p) == r == computed.shape[0]


@dataclass
class Bimodule:
    """An S-R-bimodule: left action by ``left`` algebra S, right action by ``right`` algebra R.

    ``left_action[s]`` is the row-convention matrix of ``x -> s.x`` and
    ``right_action[r]`` that of ``x -> x.r``.
    """

    left: BasedAlgebra
    right: BasedAlgebra
    left_action: np.ndarray
    right_action: np.ndarray
    left_vertex: np.ndarray
    right_vertex: np.ndarray

    @property
    def dim(self) -> int:
        return self.left_action.shape[1]

    def check(self) -> bool:
        p = self.left.p
        for a in range(self.left.dim):
            for b in range(self.right.dim):
                L, R = self.left_action[a], self.right_action[b]
                if not np.array_equal((L @ R) % p, (R @ L) % p):
                    return False
        return True


def dual_bimodule(A: BasedAlgebra) -> Bimodule:
    """``DA = Hom_K(A, K)`` with (a.f)(x) = f(xa) and (f.a)(x) = f(ax), on the dual basis."""
    M = A.mult
    left = M.transpose(1, 2, 0)   # left[a][j, l] = c(l, a, j)
    right = M.transpose(0, 2, 1)  # right[a][j, l] = c(a, l, j)
    return Bimodule(A, A, left.copy(), right.copy(), A.tgt.copy(), A.src.copy())


def triangular_matrix(R: BasedAlgebra, S: BasedAlgebra, M: Bimodule, name: str = "") -> BasedAlgebra:
    """The algebra ``[[R, 0], [M, S]]`` on the basis R, then M, then S."""
    if not (R.p == S.p == M.left.p == M.right.p):
        raise AlgebraError("modulus mismatch")
    if M.left is not S or M.right is not R:
        if M.left.dim != S.dim or M.right.dim != R.dim:
            raise AlgebraError("bimodule actions do not match the diagonal algebras")
    dR, dM, dS = R.dim, M.dim, S.dim
    n = dR + dM + dS
    mult = np.zeros((n, n, n), dtype=np.int64)
    mult[:dR, :dR, :dR] = R.mult
    oM, oS = dR, dR + dM
    mult[oS:, oS:, oS:] = S.mult
    # m_j . r_i = sum_k right[i][j, k] m_k
    mult[oM:oS, :dR, oM:oS] = M.right_action.transpose(1, 0, 2)
    # s_i . m_j = sum_k left[i][j, k] m_k
    mult[oS:, oM:oS, oM:oS] = M.left_action
    nR = R.n_vertices
    src = np.concatenate([R.src, M.left_vertex + nR, S.src + nR])
    tgt = np.concatenate([R.tgt, M.right_vertex, S.tgt + nR])
    idem = [tuple(e) for e in R.idempotents] + [tuple(i + oS for i in e) for e in S.idempotents]
    rad = None
    if R.radical_basis is not None and S.radical_basis is not None:
        rad = list(R.radical_basis) + list(range(oM, oS)) + [i + oS for i in S.radical_basis]
    labels = list(R.labels) + [f"m{j}" for j in range(dM)] + list(S.labels)
    return BasedAlgebra(R.p, mult, src, tgt, idem, rad, labels, name=name)


def replicate(A: BasedAlgebra, m: int) -> BasedAlgebra:
    """The m-replicated algebra: (m+1) diagonal copies of A, DA on the subdiagonal.

    Basis order: slot 1 copy of A, then for k = 2..m+1 the DA copy at (k, k-1)
    followed by the A copy at (k, k).  Vertex (v, k) has index (k-1)*n + v.
    """
    if m < 0:
        raise AlgebraError("m must be nonnegative")
    d, nv, p = A.dim, A.n_vertices, A.p
    if not all(len(e) == 1 for e in A.idempotents):
        raise AlgebraError("replicate requires a basic algebra with singleton idempotents")
    slots = m + 1
    diag = -np.ones((slots + 1, d), dtype=np.int64)
    dual = -np.ones((slots + 1, d), dtype=np.int64)
    pos = 0
    for k in range(1, slots + 1):
        if k >= 2:
            dual[k] = np.arange(pos, pos + d)
            pos += d
        diag[k] = np.arange(pos, pos + d)
        pos += d
    n = pos
    C = A.mult
    mult = np.zeros((n, n, n), dtype=np.int64)
    src = np.zeros(n, dtype=np.int64)
    tgt = np.zeros(n, dtype=np.int64)
    labels = [""] * n
    for k in range(1, slots + 1):
        D = diag[k]
        mult[np.ix_(D, D, D)] = C
        src[D] = A.src + (k - 1) * nv
        tgt[D] = A.tgt + (k - 1) * nv
        for j in range(d):
            labels[D[j]] = f"{A.labels[j]}@{k}"
        if k >= 2:
            F = dual[k]
            Dm = diag[k - 1]
            # diag(k,i) . dual(k,j) = sum_l c(l, i, j) dual(k,l)
            mult[np.ix_(D, F, F)] = C.transpose(1, 2, 0)
            # dual(k,j) . diag(k-1,i) = sum_l c(i, l, j) dual(k,l)
            mult[np.ix_(F, Dm, F)] = C.transpose(2, 0, 1)
            src[F] = A.tgt + (k - 1) * nv
            tgt[F] = A.src + (k - 2) * nv
            for j in range(d):
                labels[F[j]] = f"D({A.labels[j]})@{k}"
    idem = [(int(diag[k][A.idempotents[v][0]]),) for k in range(1, slots + 1) for v in range(nv)]
    rad = None
    if A.radical_basis is not None:
        rad = [int(diag[k][i]) for k in range(1, slots + 1) for i in A.radical_basis]
        rad += [int(dual[k][j]) for k in range(2, slots + 1) for j in range(d)]
    meta = {"base": A, "m": m, "diag": diag, "dual": dual}
    name = f"{A.name}^({m})" if A.name else ""
    return BasedAlgebra(p, mult, src, tgt, idem, rad, labels, name=name, meta=meta)


def slot_dual_bimodule(R: BasedAlgebra, A: BasedAlgebra) -> Bimodule:
    """``[DA]_m`` as an A-R^(m-1)-bimodule, for ``R = replicate(A, m-1)``."""
    m = R.meta["m"] + 1
    DA = dual_bimodule(A)
    right = np.zeros((R.dim, A.dim, A.dim), dtype=np.int64)
    right[R.meta["diag"][m]] = DA.right_action
    return Bimodule(A, R, DA.left_action, right, DA.left_vertex, DA.right_vertex + (m - 1) * A.n_vertices)


def idempotent_truncation(B: BasedAlgebra, vertices: Sequence[int], name: str = "") -> BasedAlgebra:
    """``eBe`` for ``e`` the sum of the listed primitive idempotents."""
    verts = sorted(set(int(v) for v in vertices))
    if not verts:
        raise AlgebraError("empty idempotent")
    renum = {v: i for i, v in enumerate(verts)}
    keep = np.flatnonzero(np.isin(B.src, verts) & np.isin(B.tgt, verts))
    index = {int(b): i for i, b in enumerate(keep)}
    mult = B.mult[np.ix_(keep, keep, keep)]
    src = [renum[int(s)] for s in B.src[keep]]
    tgt = [renum[int(t)] for t in B.tgt[keep]]
    idem = [tuple(index[i] for i in B.idempotents[v]) for v in verts]
    rad = None
    if B.radical_basis is not None:
        rad = [index[i] for i in B.radical_basis if i in index]
    return BasedAlgebra(B.p, mult, src, tgt, idem, rad, [B.labels[i] for i in keep], name=name)


def quotient_algebra(A: BasedAlgebra, ideal: np.ndarray, name: str = "") -> BasedAlgebra:
    """``A / I`` for a two-sided ideal ``I`` spanned by rows homogeneous in the vertex blocks.

    The quotient basis is a subset of A's basis (non-pivot elements per block);
    idempotents lying in ``I`` disappear.
    """
    p = A.p
    ideal = la.as_rows(la.fp(ideal, p), A.dim)
    pivot_rows: dict[int, np.ndarray] = {}
    for s in range(A.n_vertices):
        for t in range(A.n_vertices):
            blk = A.block(s, t)
            if blk.size == 0:
                continue
            sub = ideal[:, blk]
            R, piv = la.row_basis(sub, p)
            for r, c in enumerate(piv):
                row = np.zeros(A.dim, dtype=np.int64)
                row[blk] = R[r]
                pivot_rows[int(blk[c])] = row
    keep = np.array([i for i in range(A.dim) if i not in pivot_rows], dtype=np.int64)
    index = {int(b): i for i, b in enumerate(keep)}

    def reduce(vecs: np.ndarray) -> np.ndarray:
        vecs = vecs.copy() % p
        for c, row in pivot_rows.items():
            coef = vecs[..., c].copy()
            if np.any(coef):
                vecs = (vecs - coef[..., None] * row) % p
        return vecs[..., keep]

    mult = reduce(A.mult[np.ix_(keep, keep)])
    alive = [v for v in range(A.n_vertices) if all(i in index for i in A.idempotents[v])]
    renum = {v: i for i, v in enumerate(alive)}
    src = [renum.get(int(A.src[b]), -1) for b in keep]
    tgt = [renum.get(int(A.tgt[b]), -1) for b in keep]
    idem = [tuple(index[i] for i in A.idempotents[v]) for v in alive]
    rad = None
    if A.radical_basis is not None:
        Rimg = reduce(A.radical_span)
        rb, piv = la.row_basis(Rimg, p)
        if all(int(np.count_nonzero(r)) == 1 for r in rb):
            rad = [int(np.flatnonzero(r)[0]) for r in rb]
    Q = BasedAlgebra(p, mult, src, tgt, idem, rad, [A.labels[i] for i in keep], name=name)
    if A.radical_basis is None or rad is None:
        Q.__dict__["radical_span"] = la.row_basis(reduce(A.radical_span), p)[0]
    return Q


def jacobson_radical(A: BasedAlgebra, verify: bool = True) -> np.ndarray:
    """Row basis of the Jacobson radical.

    When every corner ``e_s A e_s`` is local and split and the vertex
    idempotents are pairwise non-isomorphic, the radical is the sum of the
    off-diagonal blocks and the corner radicals; otherwise the trace-form
    algorithm runs on the whole left regular representation.
    """
    R = _radical_by_corners(A)
    if R is not None:
        if verify:
            _verify_radical(A, R)
        return R
    mats = np.stack([A.left_matrix(A.basis_vector(i)) for i in range(A.dim)]) if A.dim else np.zeros((0, 0, 0), dtype=np.int64)
    R = radical_of_matrix_algebra(mats, A.p)
    if verify:
        _verify_radical(A, R)
    return R


def _radical_by_corners(A: BasedAlgebra) -> np.ndarray | None:
    p = A.p
    n = A.n_vertices
    if n == 0 or sum(A.block(s, t).size for s in range(n) for t in range(n)) != A.dim:
        return None
    corner_rad = []
    for s in range(n):
        blk = A.block(s, s)
        M = A.mult[np.ix_(blk, blk, blk)]
        mats = np.stack([M[i] for i in range(blk.size)])  # left regular representation of the corner
        C = radical_of_matrix_algebra(mats, p)
        if blk.size - C.shape[0] != 1:
            return None
        rows = np.zeros((C.shape[0], A.dim), dtype=np.int64)
        rows[:, blk] = C
        corner_rad.append(rows)
    eye = np.eye(A.dim, dtype=np.int64)
    for s in range(n):
        for t in range(n):
            if s == t or not A.block(s, t).size or not A.block(t, s).size:
                continue
            P = A.product_span(eye[A.block(s, t)], eye[A.block(t, s)])
            r = corner_rad[s].shape[0]
            if P.shape[0] and la.rank(np.vstack([corner_rad[s], P]), p) != r:
                return None
    off = [eye[A.block(s, t)] for s in range(n) for t in range(n) if s != t]
    J = la.row_basis(np.vstack(corner_rad + off), p)[0]
    cur = J
    for _ in range(A.dim + 1):
        if cur.shape[0] == 0:
            return J
        cur = A.product_span(cur, J)
    return None


def _verify_radical(A: BasedAlgebra, R: np.ndarray) -> None:
    p = A.p
    r = R.shape[0]
    full = np.eye(A.dim, dtype=np.int64)
    for S in (A.product_span(R, full), A.product_span(full, R)):
        if la.rank(np.vstack([R, S]), p) != r:
            raise AlgebraError("computed radical is not a two-sided ideal")
    cur = R
    for _ in range(A.dim + 1):
        if cur.shape[0] == 0:
            break
        cur = A.product_span(cur, R)
    else:
        raise AlgebraError("computed radical is not nilpotent")
    if r and r < A.dim:
        Q = _plain_quotient(A, R)
        mats = np.stack([Q.left_matrix(Q.basis_vector(i)) for i in range(Q.dim)])
        if radical_of_matrix_algebra(mats, p).shape[0] != 0:
            raise AlgebraError("quotient by computed radical is not semisimple")


def _plain_quotient(A: BasedAlgebra, I: np.ndarray) -> BasedAlgebra:
    """Quotient by an arbitrary two-sided ideal, on a complement basis (no vertex data)."""
    p = A.p
    R, piv, r = la.rref(I, p)
    R = R[:r]
    keep = [c for c in range(A.dim) if c not in set(piv)]

    def reduce(v):
        v = v % p
        coef = v[..., piv]
        return (v[..., keep] - np.tensordot(coef, R[:, keep], axes=(-1, 0))) % p

    mult = reduce(A.mult[np.ix_(keep, keep)])
    z = np.zeros(len(keep), dtype=np.int64)
    return BasedAlgebra(p, mult, z, z, [], None)


@dataclass
class Fingerprint:
    dim: int
    n_simples: int
    rad_dims: list[int]
    cartan: list[list[int]]
    ext_quiver: list[list[int]]
    acyclic: bool
    loewy_length: int = field(init=False)

    def __post_init__(self):
        self.loewy_length = len(self.rad_dims) + (1 if self.dim else 0)

    def signature(self) -> tuple:
        """Isomorphism-invariant summary (colour refinement on the vertex data)."""
        n = self.n_simples
        C = self.cartan
        E = self.ext_quiver
        colors = [(C[i][i], E[i][i]) for i in range(n)]
        for _ in range(max(1, n)):
            colors = [
                (colors[i], tuple(sorted((C[i][j], C[j][i], E[i][j], E[j][i], colors[j]) for j in range(n) if j != i)))
                for i in range(n)
            ]
            # compress to keep the nesting shallow
            colors = [hashlib.sha256(repr(c).encode()).hexdigest()[:16] for c in colors]
        return (self.dim, n, tuple(self.rad_dims), tuple(sorted(colors)), self.acyclic)

    def same_as(self, other: "Fingerprint") -> bool:
        return self.signature() == other.signature()

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "simples": self.n_simples,
            "radDims": self.rad_dims,
            "cartan": self.cartan,
            "extQuiver": self.ext_quiver,
            "acyclic": self.acyclic,
        }


def fingerprint(A: BasedAlgebra) -> Fingerprint:
    p = A.p
    n = A.n_vertices
    pw = A.radical_powers
    rad = pw[0] if pw else np.zeros((0, A.dim), dtype=np.int64)
    rad2 = pw[1] if len(pw) > 1 else np.zeros((0, A.dim), dtype=np.int64)
    cartan = [[0] * n for _ in range(n)]
    ext = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(n):
            blk = A.block(s, t)
            cartan[s][t] = int(blk.size)
            if blk.size:
                ext[s][t] = la.rank(rad[:, blk], p) - la.rank(rad2[:, blk], p)
    return Fingerprint(A.dim, n, [int(x.shape[0]) for x in pw], cartan, ext, _acyclic(ext))


def _acyclic(adj: list[list[int]]) -> bool:
    n = len(adj)
    indeg = [sum(1 for i in range(n) if adj[i][j]) for j in range(n)]
    queue = [j for j in range(n) if indeg[j] == 0]
    seen = 0
    while queue:
        i = queue.pop()
        seen += 1
        for j in range(n):
            if adj[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
    return seen == n
