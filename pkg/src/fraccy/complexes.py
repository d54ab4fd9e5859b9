"""Bounded complexes of projectives (cohomological indexing).

A ``ProjComplex`` stores for each degree the tops of its projective term
``C^n = sum P(v)`` and for each degree the element matrix of
``d^n: C^n -> C^{n+1}`` (shape (#C^{n+1}, #C^n, dim A)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .algebra import BasedAlgebra, replicate
from .modules import (
    Module,
    ModuleMap,
    direct_sum,
    elem_to_matrix,
    injective_sum,
    kernel,
    map_from_generators,
    nakayama_elem,
    projective_cover,
    projective_resolution,
    projective_sum,
    summand_offsets,
    vector_to_elements,
    zero_module,
)


class BudgetExhausted(RuntimeError):
    pass


def _empty(A: BasedAlgebra, rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols, A.dim), dtype=np.int64)


@dataclass
class ModComplex:
    """A bounded complex of modules with maps ``d^n: X^n -> X^{n+1}`` (row matrices)."""

    A: BasedAlgebra
    terms: dict[int, Module]
    diffs: dict[int, np.ndarray] = field(default_factory=dict)

    def term(self, n: int) -> Module:
        return self.terms.get(n) or zero_module(self.A)

    def diff(self, n: int) -> np.ndarray:
        if n in self.diffs:
            return self.diffs[n]
        return np.zeros((self.term(n).dim, self.term(n + 1).dim), dtype=np.int64)

    def degrees(self) -> list[int]:
        return sorted(n for n, M in self.terms.items() if M.dim)

    def homology_dim(self, n: int) -> int:
        p = self.A.p
        X = self.term(n)
        if X.dim == 0:
            return 0
        r_out = la.rank(self.diff(n), p) if self.term(n + 1).dim else 0
        r_in = la.rank(self.diff(n - 1), p) if self.term(n - 1).dim else 0
        return X.dim - r_out - r_in

    def homology_dims(self) -> dict[int, int]:
        degs = self.degrees()
        if not degs:
            return {}
        return {n: self.homology_dim(n) for n in range(degs[0], degs[-1] + 1)}

    def is_exact(self) -> bool:
        return all(h == 0 for h in self.homology_dims().values())

    def check(self) -> bool:
        p = self.A.p
        for n in self.degrees():
            a = self.diff(n)
            b = self.diff(n + 1)
            if a.size and b.size and np.any(la.matmul(a, b, p=p)):
                return False
            if not ModuleMap(self.term(n), self.term(n + 1), a).check():
                return False
        return True


@dataclass
class ProjComplex:
    A: BasedAlgebra
    terms: dict[int, list[int]]
    diffs: dict[int, np.ndarray] = field(default_factory=dict)

    def tops(self, n: int) -> list[int]:
        return self.terms.get(n, [])

    def diff(self, n: int) -> np.ndarray:
        if n in self.diffs:
            return self.diffs[n]
        return _empty(self.A, len(self.tops(n + 1)), len(self.tops(n)))

    def degrees(self) -> list[int]:
        return sorted(n for n, t in self.terms.items() if t)

    @property
    def lo(self) -> int | None:
        d = self.degrees()
        return d[0] if d else None

    @property
    def hi(self) -> int | None:
        d = self.degrees()
        return d[-1] if d else None

    def is_zero(self) -> bool:
        return not self.degrees()

    def multiplicities(self) -> dict[int, list[int]]:
        nv = self.A.n_vertices
        return {n: [self.tops(n).count(v) for v in range(nv)] for n in self.degrees()}

    def check(self) -> bool:
        for n in self.degrees():
            if np.any(self.A.elem_compose(self.diff(n + 1), self.diff(n))):
                return False
        return True

    def to_modules(self) -> ModComplex:
        A = self.A
        terms = {n: projective_sum(A, self.tops(n)) for n in self.degrees()}
        diffs = {n: elem_to_matrix(A, self.diff(n), self.tops(n), self.tops(n + 1)) for n in self.degrees()}
        return ModComplex(A, terms, diffs)

    def nakayama(self) -> ModComplex:
        """Termwise Nakayama functor: a complex of injective modules."""
        A = self.A
        terms = {n: injective_sum(A, self.tops(n)) for n in self.degrees()}
        diffs = {n: nakayama_elem(A, self.diff(n), self.tops(n), self.tops(n + 1)) for n in self.degrees()}
        return ModComplex(A, terms, diffs)

    def homology_dims(self) -> dict[int, int]:
        return self.to_modules().homology_dims()

    def is_acyclic(self) -> bool:
        return self.to_modules().is_exact()

    def is_stalk(self) -> bool:
        return len(self.degrees()) <= 1

    def copy(self) -> "ProjComplex":
        return ProjComplex(self.A, {n: list(t) for n, t in self.terms.items()}, {n: d.copy() for n, d in self.diffs.items()})


def stalk(A: BasedAlgebra, tops: list[int], degree: int = 0) -> ProjComplex:
    return ProjComplex(A, {degree: list(tops)})


def cone_of_identity(A: BasedAlgebra, tops: list[int], degree: int = 0) -> ProjComplex:
    """``P --id--> P`` in degrees ``degree - 1, degree``."""
    return ProjComplex(A, {degree - 1: list(tops), degree: list(tops)}, {degree - 1: A.elem_identity(tops)})


def resolution_complex(A: BasedAlgebra, res) -> ProjComplex:
    """A minimal projective resolution as a complex in degrees <= 0."""
    terms = {-i: list(t) for i, t in enumerate(res.tops) if t}
    diffs = {-i: d for i, d in res.diffs.items()}
    return ProjComplex(A, terms, diffs)


# -- minimization -------------------------------------------------------------


def _unit_inverse(A: BasedAlgebra, x: np.ndarray, v: int) -> np.ndarray:
    """Inverse of a unit of ``e_v A e_v``."""
    p = A.p
    u = A.vertex_units[v]
    lam = int(x[u]) % p
    e = A.idempotent(v)
    # x = lam (e - r) with r radical; inverse = lam^-1 (e + r + r^2 + ...)
    r = (e - la.inv_scalar(lam, p) * x) % p
    inv = e.copy()
    power = e.copy()
    for _ in range(A.dim + 1):
        power = A.multiply(power, r)
        if not np.any(power):
            break
        inv = (inv + power) % p
    inv = (la.inv_scalar(lam, p) * inv) % p
    if not np.array_equal(A.multiply(inv, x), e):
        raise ArithmeticError("unit inversion failed")
    return inv


def _find_unit(C: ProjComplex) -> tuple[int, int, int] | None:
    A = C.A
    units = A.vertex_units
    for n in C.degrees():
        src, tgt = C.tops(n), C.tops(n + 1)
        if not tgt:
            continue
        D = C.diff(n)
        for c, vc in enumerate(src):
            for r, vr in enumerate(tgt):
                if vr == vc and D[r, c, units[vc]] % A.p:
                    return n, r, c
    return None


@dataclass
class Minimized:
    """A minimal complex with an inclusion ``iota: minimal -> original`` (homotopy equivalence)."""

    complex: ProjComplex
    inclusion: dict[int, np.ndarray]


def minimize(C: ProjComplex, track: bool = False) -> Minimized | ProjComplex:
    """Cancel unit components until every differential is radical."""
    A = C.A
    C = C.copy()
    iota = {n: A.elem_identity(C.tops(n)) for n in C.degrees()} if track else None
    while True:
        hit = _find_unit(C)
        if hit is None:
            break
        n, r, c = hit
        X = [i for i in range(len(C.tops(n))) if i != c]
        Y = [j for j in range(len(C.tops(n + 1))) if j != r]
        D = C.diff(n)
        v = C.tops(n)[c]
        phi_inv = _unit_inverse(A, D[r, c], v)
        eps = D[np.ix_(Y, X)]
        gamma = D[np.ix_(Y, [c])]
        delta = D[np.ix_([r], X)]
        correction = A.elem_compose(A.elem_compose(gamma, phi_inv[None, None, :]), delta)
        new_d = (eps - correction) % A.p
        if track:
            # x -> (x, -phi^-1 delta x) in degree n; y -> (y, 0) in degree n + 1
            jn = np.zeros((len(C.tops(n)), len(X), A.dim), dtype=np.int64)
            for k, i in enumerate(X):
                jn[i, k] = A.idempotent(C.tops(n)[i])
            jn[c] = (-A.elem_compose(phi_inv[None, None, :], delta)[0]) % A.p
            jn1 = np.zeros((len(C.tops(n + 1)), len(Y), A.dim), dtype=np.int64)
            for k, j in enumerate(Y):
                jn1[j, k] = A.idempotent(C.tops(n + 1)[j])
            iota[n] = A.elem_compose(iota[n], jn)
            iota[n + 1] = A.elem_compose(iota[n + 1], jn1)
        if n - 1 in C.diffs:
            C.diffs[n - 1] = C.diffs[n - 1][X]
        if n + 1 in C.diffs:
            C.diffs[n + 1] = C.diffs[n + 1][:, Y]
        C.diffs[n] = new_d
        C.terms[n] = [C.tops(n)[i] for i in X]
        C.terms[n + 1] = [C.tops(n + 1)[j] for j in Y]
    for n in list(C.terms):
        if not C.terms[n]:
            del C.terms[n]
            if iota is not None:
                iota.pop(n, None)
    for n in list(C.diffs):
        if not C.tops(n) or not C.tops(n + 1):
            del C.diffs[n]
    if track:
        return Minimized(C, iota)
    return C


# -- projective resolutions of complexes of modules ---------------------------


@dataclass
class ResolvedComplex:
    """Projective complex P with a quasi-isomorphism ``phi: P -> X`` (row matrices per degree)."""

    complex: ProjComplex
    quasi_iso: dict[int, np.ndarray]


def resolve_complex(X: ModComplex, budget: int) -> ResolvedComplex:
    """Projective resolution of a bounded complex of modules.

    Works downwards: ``P^n`` covers ``{(p, x) in P^{n+1} + X^n : d p = 0, phi(p) = d x}``.
    The budget bounds the number of degrees below the lowest term of X.
    """
    A, p = X.A, X.A.p
    degs = X.degrees()
    P = ProjComplex(A, {})
    phi: dict[int, np.ndarray] = {}
    if not degs:
        return ResolvedComplex(P, phi)
    lo, hi = degs[0], degs[-1]
    n = hi
    while True:
        Pn1_tops = P.tops(n + 1)
        Pn1 = projective_sum(A, Pn1_tops)
        Pn2 = projective_sum(A, P.tops(n + 2))
        Xn, Xn1 = X.term(n), X.term(n + 1)
        S = direct_sum(A, [Pn1, Xn])
        T = direct_sum(A, [Pn2, Xn1])
        mat = np.zeros((S.dim, T.dim), dtype=np.int64)
        if Pn1.dim and Pn2.dim:
            mat[: Pn1.dim, : Pn2.dim] = elem_to_matrix(A, P.diff(n + 1), Pn1_tops, P.tops(n + 2))
        if Pn1.dim and Xn1.dim:
            mat[: Pn1.dim, Pn2.dim :] = phi[n + 1]
        if Xn.dim and Xn1.dim:
            mat[Pn1.dim :, Pn2.dim :] = (-X.diff(n)) % p
        Z, inc = kernel(ModuleMap(S, T, mat))
        if Z.dim == 0 and n < lo:
            break
        if n < lo - budget:
            raise BudgetExhausted(f"resolution did not terminate within {budget} steps below degree {lo}")
        cov = projective_cover(Z)
        gens = la.matmul(cov.generators, inc.matrix, p=p) if cov.tops else np.zeros((0, S.dim), dtype=np.int64)
        P.terms[n] = list(cov.tops)
        if cov.tops and Pn1_tops:
            F = np.zeros((len(Pn1_tops), len(cov.tops), A.dim), dtype=np.int64)
            for j in range(len(cov.tops)):
                F[:, j, :] = vector_to_elements(A, gens[j, : Pn1.dim], Pn1_tops)
            P.diffs[n] = F
        Pn = projective_sum(A, cov.tops)
        if Xn.dim:
            phi[n] = map_from_generators(Pn, Xn, gens[:, Pn1.dim :]).matrix if cov.tops else np.zeros((0, Xn.dim), dtype=np.int64)
        n -= 1
    P.terms = {k: v for k, v in P.terms.items() if v}
    return ResolvedComplex(P, phi)


def resolve_minimal(X: ModComplex, budget: int) -> tuple[ProjComplex, dict[int, np.ndarray]]:
    """Minimal projective complex quasi-isomorphic to X, with the quasi-isomorphism to X."""
    R = resolve_complex(X, budget)
    A = X.A
    M = minimize(R.complex, track=True)
    f = {}
    for n in M.complex.degrees():
        if n in R.quasi_iso and X.term(n).dim:
            inc = elem_to_matrix(A, M.inclusion[n], M.complex.tops(n), R.complex.tops(n))
            f[n] = la.matmul(inc, R.quasi_iso[n], p=A.p)
    return M.complex, f


# -- derived Nakayama powers -------------------------------------------------


@dataclass
class NakayamaPowers:
    """``Q_0, ..., Q_{k}`` with ``Q_i ~ nu^{i+1}(P)`` and chain maps ``f_i: Q_i -> nu Q_{i-1}``.

    ``f[0]`` is the augmentation ``Q_0 -> nu P`` in degree 0.
    """

    A: BasedAlgebra
    tops: list[int]
    Q: list[ProjComplex]
    f: list[dict[int, np.ndarray]]


def nakayama_powers(A: BasedAlgebra, count: int, budget: int, tops: list[int] | None = None) -> NakayamaPowers:
    """Compute ``Q_0..Q_{count-1}`` for the projective ``sum P(tops)`` (default: all of A)."""
    if tops is None:
        tops = list(range(A.n_vertices))
    base = ModComplex(A, {0: injective_sum(A, tops)})
    Qs, fs = [], []
    X = base
    for i in range(count):
        Q, f = resolve_minimal(X, budget)
        Qs.append(Q)
        fs.append(f)
        X = Q.nakayama()
    return NakayamaPowers(A, list(tops), Qs, fs)


def nakayama_power(A: BasedAlgebra, i: int, budget: int, tops: list[int] | None = None) -> ProjComplex:
    """Minimal complex representing ``nu^i`` of the projective (i >= 1): the complex ``Q_{i-1}``."""
    if i < 1:
        raise ValueError("i must be at least 1")
    return nakayama_powers(A, i, budget, tops).Q[i - 1]


# -- the key sequence over the replicated algebra -----------------------------


@dataclass
class KeySequence:
    B: BasedAlgebra
    ell: int
    total: ProjComplex
    augmentation: np.ndarray  # total degree 0 term -> [DA]_ell
    target: Module  # the stalk module [DA]_ell
    powers: NakayamaPowers

    def augmented(self) -> ModComplex:
        mc = self.total.to_modules()
        mc.terms[1] = self.target
        mc.diffs[0] = self.augmentation
        return mc


def _dual_elem_at(B: BasedAlgebra, slot: int, vec: np.ndarray, A: BasedAlgebra) -> np.ndarray:
    out = np.zeros(B.dim, dtype=np.int64)
    out[B.meta["dual"][slot]] = vec
    return out


def _diag_elems(B: BasedAlgebra, slot: int, F: np.ndarray) -> np.ndarray:
    out = np.zeros(F.shape[:2] + (B.dim,), dtype=np.int64)
    out[..., B.meta["diag"][slot]] = F
    return out


def build_key_sequence(A: BasedAlgebra, ell: int, budget: int) -> KeySequence:
    """Total complex of ``[Q_{l-1}]_1 -> [nu Q_{l-2}, Q_{l-2}]_1 -> ... -> [nu Q_0, Q_0]_{l-1}``.

    Column ``i`` (placed at horizontal position ``-i``) consists of the projectives
    ``P(w, l - i)`` of the replicated algebra; its vertical maps are the diagonal
    copies of ``Q_i``'s differentials and the maps to column ``i - 1`` are the
    components of ``f_i`` read as elements of DA.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    from .stalks import make_stalk

    B = replicate(A, ell - 1)
    nv = A.n_vertices
    powers = nakayama_powers(A, ell, budget)
    Q, f = powers.Q, powers.f
    # total term in degree n: list of (column i, vertical degree q, summand index r)
    cells: dict[int, list[tuple[int, int, int]]] = {}
    for i in range(ell):
        for q in Q[i].degrees():
            for r in range(len(Q[i].tops(q))):
                cells.setdefault(q - i, []).append((i, q, r))
    terms = {n: [Q[i].tops(q)[r] + (ell - i - 1) * nv for (i, q, r) in cs] for n, cs in cells.items()}
    pos = {n: {cell: k for k, cell in enumerate(cs)} for n, cs in cells.items()}
    diffs: dict[int, np.ndarray] = {}
    for n, cs in cells.items():
        if n + 1 not in cells:
            continue
        D = np.zeros((len(cells[n + 1]), len(cs), B.dim), dtype=np.int64)
        for k, (i, q, r) in enumerate(cs):
            slot = ell - i
            sign = 1 if i % 2 == 0 else -1
            # vertical: Q_i^q -> Q_i^{q+1}
            if Q[i].tops(q + 1):
                col = Q[i].diff(q)[:, r, :]
                for r2 in range(col.shape[0]):
                    if np.any(col[r2]):
                        D[pos[n + 1][(i, q + 1, r2)], k, B.meta["diag"][slot]] = (sign * col[r2]) % B.p
            # horizontal: Q_i^q -> nu Q_{i-1}^q via f_i, landing in column i - 1
            if i >= 1 and q in f[i] and Q[i - 1].tops(q):
                fmat = f[i][q]  # rows: summands of Q_i^q, cols: nu Q_{i-1}^q
                src_seg = summand_offsets(A, Q[i].tops(q))[r]
                tgt_tops = Q[i - 1].tops(q)
                tgt_segs = summand_offsets(A, tgt_tops, "inj")
                gen_row = src_seg[_generator_position(A, Q[i].tops(q)[r])]
                for r2, v in enumerate(tgt_tops):
                    comp = fmat[gen_row, tgt_segs[r2]]
                    if np.any(comp):
                        vec = np.zeros(A.dim, dtype=np.int64)
                        vec[A.idx_tgt[v]] = comp
                        D[pos[n + 1][(i - 1, q, r2)], k] = (D[pos[n + 1][(i - 1, q, r2)], k] + _dual_elem_at(B, slot + 1, vec, A)) % B.p
        diffs[n] = D
    total = ProjComplex(B, terms, diffs)
    # augmentation: column 0, vertical degree 0 -> [DA]_ell via f_0
    target = make_stalk(B, _dual_regular(A), ell)
    T0 = projective_sum(B, terms.get(0, []))
    aug = np.zeros((T0.dim, target.dim), dtype=np.int64)
    if 0 in cells:
        f0 = f[0][0]
        gens = []
        for (i, q, r) in cells[0]:
            if i == 0:
                seg = summand_offsets(A, Q[0].tops(0))[r]
                gens.append(f0[seg[_generator_position(A, Q[0].tops(0)[r])]])
            else:
                gens.append(np.zeros(target.dim, dtype=np.int64))
        aug = map_from_generators(T0, target, np.array(gens)).matrix
    return KeySequence(B, ell, total, aug, target, powers)


def _generator_position(A: BasedAlgebra, w: int) -> int:
    """Position of ``e_w`` in the basis of ``P(w)``."""
    return int(np.flatnonzero(A.idx_src[w] == A.vertex_units[w])[0])


def _dual_regular(A: BasedAlgebra) -> Module:
    from .modules import dual_regular

    return dual_regular(A)
