"""Finite-dimensional right modules over a BasedAlgebra.

A module stores one action matrix per algebra basis element in row
convention (``x . b = x @ act[b]``) and a vertex grading: basis vector ``i``
lies in ``M e_{grading[i]}``.  A map ``M -> N`` is a ``dim M x dim N`` matrix
acting on rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import linalg as la
from .algebra import BasedAlgebra


class ModuleError(ValueError):
    pass


class Module:
    def __init__(self, A: BasedAlgebra, act, grading, proj_tops=None, inj_socles=None, name: str = ""):
        self.A = A
        self.p = A.p
        self.act = la.fp(act, A.p)
        self.grading = np.asarray(grading, dtype=np.int64).reshape(-1)
        n = self.grading.shape[0]
        if self.act.shape != (A.dim, n, n):
            raise ModuleError(f"action has shape {self.act.shape}, expected {(A.dim, n, n)}")
        # set when the module is literally a sum of P(v) (resp. I(v)) in canonical bases
        self.proj_tops = None if proj_tops is None else list(proj_tops)
        self.inj_socles = None if inj_socles is None else list(inj_socles)
        self.name = name

    def __repr__(self) -> str:
        return f"<Module {self.name or ''} dim={self.dim} dimvec={self.dim_vector}>"

    @property
    def dim(self) -> int:
        return self.grading.shape[0]

    @cached_property
    def blocks(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.grading == v) for v in range(self.A.n_vertices)]

    @property
    def dim_vector(self) -> list[int]:
        return [int(b.size) for b in self.blocks]

    def act_by(self, x) -> np.ndarray:
        """Matrix of the action of the algebra element ``x``."""
        x = la.fp(x, self.p)
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return np.tensordot(x, self.act, axes=(0, 0)) % self.p

    def check(self) -> bool:
        A, p = self.A, self.p
        n = self.dim
        for v in range(A.n_vertices):
            E = self.act_by(A.idempotent(v))
            want = np.zeros((n, n), dtype=np.int64)
            want[self.blocks[v], self.blocks[v]] = 1
            if not np.array_equal(E, want):
                return False
        lhs = np.einsum("iab,jbc->ijac", self.act, self.act) % p
        rhs = np.einsum("ijk,kac->ijac", A.mult, self.act) % p
        return bool(np.array_equal(lhs, rhs))

    def dual(self) -> "Module":
        """``DM = Hom_K(M, K)``, a right module over the opposite algebra."""
        return Module(
            self.A.op(),
            self.act.transpose(0, 2, 1),
            self.grading,
            proj_tops=self.inj_socles,
            inj_socles=self.proj_tops,
        )

    def is_zero(self) -> bool:
        return self.dim == 0

    @cached_property
    def radical_rows(self) -> np.ndarray:
        """Row basis of ``M rad A`` (in M's coordinates)."""
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        R = self.A.radical_span
        if R.shape[0] == 0:
            return np.zeros((0, self.dim), dtype=np.int64)
        mats = np.tensordot(R, self.act, axes=(1, 0)) % self.p  # r n n
        rows = la.as_rows(mats.transpose(1, 0, 2), self.dim)
        return la.row_basis(rows, self.p)[0]

    @cached_property
    def socle_rows(self) -> np.ndarray:
        """Row basis of ``{x : x rad A = 0}``."""
        R = self.A.radical_span
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        if R.shape[0] == 0:
            return np.eye(self.dim, dtype=np.int64)
        mats = np.tensordot(R, self.act, axes=(1, 0)) % self.p
        big = np.concatenate(list(mats), axis=1)
        return la.left_kernel(big, self.p)

    def top_dims(self) -> list[int]:
        rad = self.radical_rows
        out = []
        for v, blk in enumerate(self.blocks):
            r = la.rank(rad[:, blk], self.p) if rad.shape[0] else 0
            out.append(int(blk.size) - r)
        return out

    def socle_dims(self) -> list[int]:
        soc = self.socle_rows
        return [la.rank(soc[:, blk], self.p) if soc.shape[0] else 0 for blk in self.blocks]


@dataclass
class ModuleMap:
    source: Module
    target: Module
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = la.fp(self.matrix, self.source.p).reshape(self.source.dim, self.target.dim)

    def check(self) -> bool:
        p = self.source.p
        lhs = np.matmul(self.source.act, self.matrix) % p
        rhs = np.matmul(self.matrix, self.target.act) % p
        return bool(np.array_equal(lhs, rhs))

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``other after self``."""
        return ModuleMap(self.source, other.target, la.matmul(self.matrix, other.matrix, p=self.source.p))

    def rank(self) -> int:
        return la.rank(self.matrix, self.source.p)


# -- basic constructors -----------------------------------------------------


def projective(A: BasedAlgebra, v: int) -> Module:
    """``P(v) = e_v A`` on the basis ``{b : src(b) = v}``."""
    idx = A.idx_src[v]
    act = A.mult[np.ix_(idx, np.arange(A.dim), idx)].transpose(1, 0, 2)
    return Module(A, act, A.tgt[idx], proj_tops=[v], name=f"P{v}")


def injective(A: BasedAlgebra, v: int) -> Module:
    """``I(v) = D(A e_v)`` on the dual basis of ``{b : tgt(b) = v}``."""
    idx = A.idx_tgt[v]
    act = A.mult[np.ix_(np.arange(A.dim), idx, idx)].transpose(0, 2, 1)
    return Module(A, act, A.src[idx], inj_socles=[v], name=f"I{v}")


def simple(A: BasedAlgebra, v: int) -> Module:
    act = np.zeros((A.dim, 1, 1), dtype=np.int64)
    for i in A.idempotents[v]:
        act[i, 0, 0] = 1
    return Module(A, act, [v], name=f"S{v}")


def zero_module(A: BasedAlgebra) -> Module:
    return Module(A, np.zeros((A.dim, 0, 0), dtype=np.int64), [], proj_tops=[], inj_socles=[])


def direct_sum(A: BasedAlgebra, mods: Sequence[Module]) -> Module:
    if not mods:
        return zero_module(A)
    n = sum(M.dim for M in mods)
    act = np.zeros((A.dim, n, n), dtype=np.int64)
    off = 0
    for M in mods:
        act[:, off : off + M.dim, off : off + M.dim] = M.act
        off += M.dim
    grading = np.concatenate([M.grading for M in mods])
    tops = socs = None
    if all(M.proj_tops is not None for M in mods):
        tops = [v for M in mods for v in M.proj_tops]
    if all(M.inj_socles is not None for M in mods):
        socs = [v for M in mods for v in M.inj_socles]
    return Module(A, act, grading, proj_tops=tops, inj_socles=socs)


def projective_sum(A: BasedAlgebra, tops: Sequence[int]) -> Module:
    return direct_sum(A, [projective(A, v) for v in tops]) if tops else zero_module(A)


def injective_sum(A: BasedAlgebra, socles: Sequence[int]) -> Module:
    return direct_sum(A, [injective(A, v) for v in socles]) if socles else zero_module(A)


def regular(A: BasedAlgebra) -> Module:
    return projective_sum(A, range(A.n_vertices))


def dual_regular(A: BasedAlgebra) -> Module:
    return injective_sum(A, range(A.n_vertices))


def summand_offsets(A: BasedAlgebra, tops: Sequence[int], kind: str = "proj") -> list[np.ndarray]:
    """Index ranges of the summands of a projective (or injective) sum."""
    idx = A.idx_src if kind == "proj" else A.idx_tgt
    out, off = [], 0
    for v in tops:
        k = idx[v].size
        out.append(np.arange(off, off + k))
        off += k
    return out


# -- sub and quotient modules -----------------------------------------------


def _block_echelon(M: Module, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Graded row basis of a submodule: block-wise RREF; returns (basis, pivot columns)."""
    p = M.p
    rows = la.as_rows(la.fp(rows, p), M.dim)
    basis, pivots = [], []
    for blk in M.blocks:
        if blk.size == 0:
            continue
        R, piv = la.row_basis(rows[:, blk], p)
        for r, c in enumerate(piv):
            row = np.zeros(M.dim, dtype=np.int64)
            row[blk] = R[r]
            basis.append(row)
            pivots.append(int(blk[c]))
    if not basis:
        return np.zeros((0, M.dim), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.array(basis, dtype=np.int64), np.array(pivots, dtype=np.int64)


def generated_submodule_rows(M: Module, vectors: np.ndarray) -> np.ndarray:
    """Rows spanning ``X A`` for the rows X."""
    vectors = la.as_rows(la.fp(vectors, M.p), M.dim)
    if vectors.shape[0] == 0 or M.dim == 0:
        return np.zeros((0, M.dim), dtype=np.int64)
    imgs = np.matmul(vectors, M.act) % M.p  # dimA, k, n
    return la.row_basis(la.as_rows(imgs, M.dim), M.p)[0]


def submodule(M: Module, rows: np.ndarray) -> tuple[Module, ModuleMap]:
    """Submodule spanned by rows (assumed closed under the action) and its inclusion."""
    B, piv = _block_echelon(M, rows)
    if B.shape[0] == 0:
        Z = zero_module(M.A)
        return Z, ModuleMap(Z, M, np.zeros((0, M.dim), dtype=np.int64))
    imgs = np.matmul(B, M.act) % M.p  # dimA, k, n
    act = imgs[:, :, piv]
    check = np.matmul(act, B) % M.p
    if not np.array_equal(check, imgs):
        raise ModuleError("row span is not a submodule")
    S = Module(M.A, act, M.grading[piv])
    return S, ModuleMap(S, M, B)


def quotient(M: Module, rows: np.ndarray) -> tuple[Module, ModuleMap]:
    """``M / U`` for a submodule span ``U`` and the projection."""
    B, piv = _block_echelon(M, rows)
    pivset = set(piv.tolist())
    nonpiv = np.array([i for i in range(M.dim) if i not in pivset], dtype=np.int64)
    n = M.dim
    I = np.eye(n, dtype=np.int64)
    Pi = I[:, nonpiv].copy()
    if B.shape[0]:
        Pi = (Pi - I[:, piv] @ B[:, nonpiv]) % M.p
    act = np.matmul(M.act[:, nonpiv, :], Pi) % M.p
    Q = Module(M.A, act, M.grading[nonpiv])
    return Q, ModuleMap(M, Q, Pi)


def kernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    M = f.source
    if M.dim == 0:
        return submodule(M, np.zeros((0, 0), dtype=np.int64))
    rows = la.left_kernel(f.matrix, M.p) if f.target.dim else np.eye(M.dim, dtype=np.int64)
    return submodule(M, rows)


def image_rows(f: ModuleMap) -> np.ndarray:
    if f.source.dim == 0:
        return np.zeros((0, f.target.dim), dtype=np.int64)
    return la.row_basis(f.matrix, f.source.p)[0]


def image(f: ModuleMap) -> tuple[Module, ModuleMap]:
    return submodule(f.target, image_rows(f))


def cokernel(f: ModuleMap) -> tuple[Module, ModuleMap]:
    return quotient(f.target, image_rows(f))


def radical_of_module(M: Module) -> tuple[Module, ModuleMap]:
    return submodule(M, M.radical_rows)


def top(M: Module) -> tuple[Module, ModuleMap]:
    return quotient(M, M.radical_rows)


def socle(M: Module) -> tuple[Module, ModuleMap]:
    return submodule(M, M.socle_rows)


def restrict_to_rows(M: Module, perm: np.ndarray) -> Module:
    """Same module on the basis reordered by ``perm``."""
    return Module(M.A, M.act[np.ix_(np.arange(M.A.dim), perm, perm)], M.grading[perm])


# -- homomorphisms ----------------------------------------------------------


def hom_basis(M: Module, N: Module) -> np.ndarray:
    """Basis of ``Hom_A(M, N)`` as an array of shape (k, dim M, dim N)."""
    if M.A is not N.A:
        raise ModuleError("modules over different algebras")
    A, p = M.A, M.p
    if M.dim == 0 or N.dim == 0:
        return np.zeros((0, M.dim, N.dim), dtype=np.int64)
    if M.proj_tops is not None:
        return _hom_from_projective(M, N)
    nv = A.n_vertices
    offsets, off = [], 0
    for v in range(nv):
        offsets.append(off)
        off += M.blocks[v].size * N.blocks[v].size
    nunk = off
    if nunk == 0:
        return np.zeros((0, M.dim, N.dim), dtype=np.int64)
    eqs = []
    for g in A.generators:
        s, t = int(A.src[g]), int(A.tgt[g])
        Ms, Mt, Ns, Nt = M.blocks[s], M.blocks[t], N.blocks[s], N.blocks[t]
        if Ms.size == 0 or Nt.size == 0:
            continue
        Ag = M.act[g][np.ix_(Ms, Mt)]
        Bg = N.act[g][np.ix_(Ns, Nt)]
        E = np.zeros((Ms.size * Nt.size, nunk), dtype=np.int64)
        if Mt.size:
            E[:, offsets[t] : offsets[t] + Mt.size * Nt.size] += np.kron(Ag, np.eye(Nt.size, dtype=np.int64))
        if Ns.size:
            E[:, offsets[s] : offsets[s] + Ms.size * Ns.size] -= np.kron(np.eye(Ms.size, dtype=np.int64), Bg.T)
        eqs.append(E % p)
    if eqs:
        K = la.kernel_basis(np.vstack(eqs), p)
    else:
        K = np.eye(nunk, dtype=np.int64)
    out = np.zeros((K.shape[1], M.dim, N.dim), dtype=np.int64)
    for v in range(nv):
        mv, nvb = M.blocks[v], N.blocks[v]
        if mv.size == 0 or nvb.size == 0:
            continue
        seg = K[offsets[v] : offsets[v] + mv.size * nvb.size, :]
        out[:, mv[:, None], nvb[None, :]] = seg.T.reshape(-1, mv.size, nvb.size)
    return out


def _hom_from_projective(P: Module, N: Module) -> np.ndarray:
    """``Hom(sum P(v_i), N) = sum N e_{v_i}``: send each generator to a vector of N e_{v_i}."""
    A = P.A
    segs = summand_offsets(A, P.proj_tops)
    maps = []
    for i, v in enumerate(P.proj_tops):
        idx = A.idx_src[v]
        for n_idx in N.blocks[v]:
            vec = np.zeros(N.dim, dtype=np.int64)
            vec[n_idx] = 1
            mat = np.zeros((P.dim, N.dim), dtype=np.int64)
            mat[segs[i]] = np.matmul(vec, N.act[idx]) % P.p
            maps.append(mat)
    if not maps:
        return np.zeros((0, P.dim, N.dim), dtype=np.int64)
    return np.array(maps, dtype=np.int64)


def hom_dim(M: Module, N: Module) -> int:
    if M.proj_tops is not None:
        return sum(int(N.blocks[v].size) for v in M.proj_tops)
    return hom_basis(M, N).shape[0]


def map_from_generators(P: Module, N: Module, images: Sequence[np.ndarray]) -> ModuleMap:
    """The map from a projective sum sending its i-th generator to ``images[i]``."""
    A = P.A
    segs = summand_offsets(A, P.proj_tops)
    mat = np.zeros((P.dim, N.dim), dtype=np.int64)
    for i, v in enumerate(P.proj_tops):
        mat[segs[i]] = np.matmul(la.fp(images[i], P.p), N.act[A.idx_src[v]]) % P.p
    return ModuleMap(P, N, mat)


# -- element matrices: maps between projective sums -------------------------


def elem_to_matrix(A: BasedAlgebra, F: np.ndarray, source_tops: Sequence[int], target_tops: Sequence[int]) -> np.ndarray:
    """Module-map matrix of the element matrix ``F`` (shape (#target, #source, dim A))."""
    ss = summand_offsets(A, source_tops)
    ts = summand_offsets(A, target_tops)
    n_s = sum(s.size for s in ss)
    n_t = sum(t.size for t in ts)
    mat = np.zeros((n_s, n_t), dtype=np.int64)
    for c, vc in enumerate(source_tops):
        for r, vr in enumerate(target_tops):
            x = F[r, c]
            if not np.any(x):
                continue
            Lx = A.left_matrix(x)
            mat[np.ix_(ss[c], ts[r])] = Lx[np.ix_(A.idx_src[vc], A.idx_src[vr])]
    return mat


def vector_to_elements(A: BasedAlgebra, vec: np.ndarray, tops: Sequence[int]) -> np.ndarray:
    """Split a vector of a projective sum into algebra elements, one per summand."""
    segs = summand_offsets(A, tops)
    out = np.zeros((len(tops), A.dim), dtype=np.int64)
    for r, v in enumerate(tops):
        out[r, A.idx_src[v]] = vec[segs[r]]
    return out


def nakayama_elem(A: BasedAlgebra, F: np.ndarray, source_tops: Sequence[int], target_tops: Sequence[int]) -> np.ndarray:
    """Matrix of nu(F): sum I(source) -> sum I(target)."""
    ss = summand_offsets(A, source_tops, "inj")
    ts = summand_offsets(A, target_tops, "inj")
    n_s = sum(s.size for s in ss)
    n_t = sum(t.size for t in ts)
    mat = np.zeros((n_s, n_t), dtype=np.int64)
    for c, vc in enumerate(source_tops):
        for r, vr in enumerate(target_tops):
            x = F[r, c]
            if not np.any(x):
                continue
            Rt = A.right_matrix(x).T
            mat[np.ix_(ss[c], ts[r])] = Rt[np.ix_(A.idx_tgt[vc], A.idx_tgt[vr])]
    return mat


# -- covers, envelopes, resolutions ----------------------------------------


@dataclass
class Cover:
    """Minimal projective cover ``sum P(tops) -> M``; ``generators[i]`` in ``M e_{tops[i]}``."""

    tops: list[int]
    generators: np.ndarray
    map: ModuleMap


def projective_cover(M: Module) -> Cover:
    A, p = M.A, M.p
    rad = M.radical_rows
    tops, gens = [], []
    for v, blk in enumerate(M.blocks):
        if blk.size == 0:
            continue
        sub = rad[:, blk] if rad.shape[0] else np.zeros((0, blk.size), dtype=np.int64)
        R, piv = la.row_basis(sub, p)
        cur, r0 = R, R.shape[0]
        for j in range(blk.size):
            cand = np.zeros((1, blk.size), dtype=np.int64)
            cand[0, j] = 1
            test = np.vstack([cur, cand])
            r = la.rank(test, p)
            if r > r0:
                cur, r0 = test, r
                g = np.zeros(M.dim, dtype=np.int64)
                g[blk[j]] = 1
                tops.append(v)
                gens.append(g)
    P = projective_sum(A, tops)
    G = np.array(gens, dtype=np.int64).reshape(len(gens), M.dim)
    f = map_from_generators(P, M, G) if tops else ModuleMap(P, M, np.zeros((0, M.dim), dtype=np.int64))
    return Cover(tops, G, f)


def syzygy(M: Module, k: int = 1) -> Module:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return strip_projectives(M)
    X = M
    for _ in range(k):
        X = kernel(projective_cover(X).map)[0]
    return X


def injective_envelope(M: Module) -> tuple[list[int], ModuleMap]:
    """Minimal envelope ``M -> sum I(socles)``, via the cover of DM over the opposite algebra."""
    c = projective_cover(M.dual())
    I = injective_sum(M.A, c.tops)
    return c.tops, ModuleMap(M, I, c.map.matrix.T)


def cosyzygy(M: Module, k: int = 1) -> Module:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return strip_injectives(M)
    D = M.dual()
    for _ in range(k):
        D = kernel(projective_cover(D).map)[0]
    return D.dual()


def is_projective(M: Module) -> bool:
    c = projective_cover(M)
    return c.map.source.dim == M.dim


def is_injective(M: Module) -> bool:
    return is_projective(M.dual())


def strip_projectives(M: Module) -> Module:
    """M with its projective direct summands removed (up to isomorphism)."""
    from .endo import decompose, split_summand

    parts = decompose(M)
    keep = [U for U in parts if not is_projective(split_summand(M, U))]
    if len(keep) == len(parts):
        return M
    if not keep:
        return zero_module(M.A)
    return submodule(M, np.vstack(keep))[0]


def strip_injectives(M: Module) -> Module:
    return strip_projectives(M.dual()).dual()


@dataclass
class Resolution:
    """Minimal projective resolution ``... -> P_1 -> P_0 -> M``.

    ``tops[i]`` lists the summands of ``P_i``; ``diffs[i]`` (i >= 1) is the
    element matrix of ``P_i -> P_{i-1}``; ``augmentation`` is ``P_0 -> M``.
    ``complete`` is True when the resolution terminated within the computed range.
    """

    module: Module
    tops: list[list[int]]
    diffs: dict[int, np.ndarray]
    augmentation: ModuleMap
    complete: bool

    @property
    def length(self) -> int:
        return len(self.tops) - 1


def projective_resolution(M: Module, length: int) -> Resolution:
    """Compute ``P_0, ..., P_length`` (stops early once a syzygy vanishes)."""
    A = M.A
    c = projective_cover(M)
    tops = [c.tops]
    diffs: dict[int, np.ndarray] = {}
    aug = c.map
    cur_map = aug
    complete = False
    for i in range(1, length + 1):
        K, inc = kernel(cur_map)
        if K.dim == 0:
            complete = True
            break
        ck = projective_cover(K)
        gens_in_prev = la.matmul(ck.generators, inc.matrix, p=A.p)
        prev_tops = tops[-1]
        F = np.zeros((len(prev_tops), len(ck.tops), A.dim), dtype=np.int64)
        for j in range(len(ck.tops)):
            F[:, j, :] = vector_to_elements(A, gens_in_prev[j], prev_tops)
        diffs[i] = F
        tops.append(ck.tops)
        P = projective_sum(A, ck.tops)
        prevP = cur_map.source
        cur_map = ModuleMap(P, prevP, elem_to_matrix(A, F, ck.tops, prev_tops))
    else:
        if kernel(cur_map)[0].dim == 0:
            complete = True
    return Resolution(M, tops, diffs, aug, complete)


# -- Ext ---------------------------------------------------------------------


def _hom_cochain(res: Resolution, N: Module, i: int) -> np.ndarray:
    """Matrix of ``Hom(P_{i-1}, N) -> Hom(P_i, N)`` induced by ``d_i``."""
    A, p = N.A, N.p
    F = res.diffs[i]
    prev, cur = res.tops[i - 1], res.tops[i]
    rows = [N.blocks[v] for v in prev]
    cols = [N.blocks[v] for v in cur]
    nr = sum(r.size for r in rows)
    nc = sum(c.size for c in cols)
    mat = np.zeros((nr, nc), dtype=np.int64)
    ro = np.cumsum([0] + [r.size for r in rows])
    co = np.cumsum([0] + [c.size for c in cols])
    for r in range(len(prev)):
        for c in range(len(cur)):
            x = F[r, c]
            if np.any(x) and rows[r].size and cols[c].size:
                mat[ro[r] : ro[r + 1], co[c] : co[c + 1]] = N.act_by(x)[np.ix_(rows[r], cols[c])]
    return mat


def ext_dim(M: Module, N: Module, i: int, resolution: Resolution | None = None) -> int:
    """``dim Ext^i_A(M, N)`` from a minimal projective resolution of M."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i == 0:
        return hom_basis(M, N).shape[0]
    res = resolution
    if res is None or (res.length < i + 1 and not res.complete):
        res = projective_resolution(M, i + 1)
    if i > res.length:
        return 0
    p = N.p
    ci = sum(int(N.blocks[v].size) for v in res.tops[i])
    rin = la.rank(_hom_cochain(res, N, i), p)
    rout = la.rank(_hom_cochain(res, N, i + 1), p) if i + 1 <= res.length else 0
    return ci - rin - rout


def ext_dim_dual(M: Module, N: Module, i: int) -> int:
    """``dim Ext^i_A(M, N)`` computed as ``Ext^i`` over the opposite algebra of ``(DN, DM)``."""
    return ext_dim(N.dual(), M.dual(), i)


# -- Nakayama functor and AR translates --------------------------------------


def nakayama(M: Module) -> Module:
    """``nu(M)`` for a projective module (returned as a sum of indecomposable injectives)."""
    tops = M.proj_tops
    if tops is None:
        c = projective_cover(M)
        if c.map.source.dim != M.dim:
            raise ModuleError("nakayama: module is not projective")
        tops = c.tops
    return injective_sum(M.A, tops)


def nakayama_inverse(M: Module) -> Module:
    socs = M.inj_socles
    if socs is None:
        tops, env = injective_envelope(M)
        if env.target.dim != M.dim:
            raise ModuleError("nakayama_inverse: module is not injective")
        socs = tops
    return projective_sum(M.A, socs)


def tau(M: Module) -> Module:
    """Auslander-Reiten translate ``ker(nu P_1 -> nu P_0)``."""
    res = projective_resolution(M, 1)
    A = M.A
    if res.length < 1:
        return zero_module(A)
    F = res.diffs[1]
    I1 = injective_sum(A, res.tops[1])
    I0 = injective_sum(A, res.tops[0])
    nu = ModuleMap(I1, I0, nakayama_elem(A, F, res.tops[1], res.tops[0]))
    return kernel(nu)[0]


def tau_inverse(M: Module) -> Module:
    return tau(M.dual()).dual()


def tau_n(M: Module, n: int) -> Module:
    if n < 1:
        raise ValueError("n must be at least 1")
    return tau(syzygy(M, n - 1)) if n > 1 else tau(M)


def tau_n_inverse(M: Module, n: int) -> Module:
    if n < 1:
        raise ValueError("n must be at least 1")
    return tau_inverse(cosyzygy(M, n - 1)) if n > 1 else tau_inverse(M)
