"""Endomorphism rings: decomposition into indecomposables, isomorphism tests,
endomorphism algebras and stable endomorphism algebras."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from . import linalg as la
from .algebra import BasedAlgebra, quotient_algebra, _verify_radical
from .modules import (
    Module,
    ModuleError,
    ModuleMap,
    hom_basis,
    projective,
    submodule,
)
from .radical import radical_of_matrix_algebra

_RANDOM_TRIES = 200


def minimal_polynomial(X: np.ndarray, p: int) -> list[int]:
    """Monic minimal polynomial of a square matrix, coefficients from the leading term down."""
    n = X.shape[0]
    powers = [np.eye(n, dtype=np.int64).reshape(-1)]
    cur = np.eye(n, dtype=np.int64)
    for d in range(1, n + 1):
        cur = (cur @ X) % p
        stack = np.array(powers, dtype=np.int64)
        c = la.solve(stack.T, cur.reshape(-1), p)
        if c is not None:
            # X^d = sum c_k X^k
            coeffs = [1] + [(-int(c[k])) % p for k in range(d - 1, -1, -1)]
            return coeffs
        powers.append(cur.reshape(-1))
    raise ArithmeticError("minimal polynomial search failed")


def poly_eval(coeffs: list[int], X: np.ndarray, p: int) -> np.ndarray:
    n = X.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in coeffs:
        out = (out @ X + c * eye) % p
    return out


def _primary_part(coeffs: list[int], p: int) -> list[int] | None:
    """One primary factor ``f^a`` of the polynomial if it has two coprime factors."""
    x = sympy.Symbol("x")
    poly = sympy.Poly(coeffs, x, modulus=p)
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    f, a = factors[0]
    g = f**a
    return [int(c) % p for c in g.all_coeffs()]


def _splitting_endo(X: np.ndarray, p: int) -> np.ndarray | None:
    """A power of a polynomial in X that is neither nilpotent nor invertible, if one exists."""
    if X.shape[0] == 0:
        return None
    g = _primary_part(minimal_polynomial(X, p), p)
    if g is None:
        return None
    return poly_eval(g, X, p)


def _fitting_split(M: Module, psi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    p = M.p
    Phi = la.matrix_power(psi, M.dim, p)
    ker = la.left_kernel(Phi, p)
    im = la.row_basis(Phi, p)[0]
    return ker, im


def _endo_radical(E: np.ndarray, p: int) -> np.ndarray:
    """Coefficient rows of rad End for a basis E of matrices closed under products."""
    return radical_of_matrix_algebra(E.transpose(0, 2, 1), p)


def _coords(E: np.ndarray, X: np.ndarray, p: int) -> np.ndarray:
    flat = E.reshape(E.shape[0], E.shape[1] * E.shape[2])
    c = la.solve(flat.T, X.reshape(-1), p)
    if c is None:
        raise ModuleError("matrix is not in the span")
    return c


def _find_split(M: Module, rng: np.random.Generator) -> np.ndarray | None:
    """An endomorphism exhibiting M as decomposable, or None when End M is local."""
    p = M.p
    E = hom_basis(M, M)
    if E.shape[0] <= 1:
        return None
    for X in E:
        psi = _splitting_endo(X, p)
        if psi is not None:
            return psi
    R = _endo_radical(E, p)
    s = E.shape[0] - R.shape[0]
    if s == 1:
        return None
    # basis of a complement of the radical
    comp = _complement(R, E.shape[0], p)
    semis = np.tensordot(comp, E, axes=(1, 0)) % p
    commutative = True
    for i in range(len(semis)):
        for j in range(i + 1, len(semis)):
            c = (semis[i] @ semis[j] - semis[j] @ semis[i]) % p
            if np.any(c) and not _in_span(R, _coords(E, c, p), p):
                commutative = False
                break
        if not commutative:
            break
    if commutative:
        # Berlekamp subalgebra: fixed points of Frobenius on E / rad E
        F = []
        for X in semis:
            Y = la.matrix_power(X, p, p)
            F.append(_quotient_coords(comp, R, _coords(E, Y, p), p))
        Fm = (np.array(F, dtype=np.int64) - np.eye(len(semis), dtype=np.int64)) % p
        fixed = la.left_kernel(Fm, p)
        if fixed.shape[0] <= 1:
            return None
        for row in fixed:
            X = np.tensordot(row, semis, axes=(0, 0)) % p
            psi = _splitting_endo(X, p)
            if psi is not None:
                return psi
    for _ in range(_RANDOM_TRIES):
        coef = rng.integers(0, p, size=E.shape[0])
        X = np.tensordot(coef, E, axes=(0, 0)) % p
        psi = _splitting_endo(X, p)
        if psi is not None:
            return psi
    raise ModuleError("could not split a decomposable module")


def _complement(R: np.ndarray, d: int, p: int) -> np.ndarray:
    cur = la.as_rows(R, d)
    r0 = la.rank(cur, p) if cur.shape[0] else 0
    out = []
    for i in range(d):
        e = np.zeros((1, d), dtype=np.int64)
        e[0, i] = 1
        cand = np.vstack([cur, e])
        r = la.rank(cand, p)
        if r > r0:
            out.append(e[0])
            cur, r0 = cand, r
    return la.as_rows(np.array(out, dtype=np.int64), d) if out else np.zeros((0, d), dtype=np.int64)


def _in_span(R: np.ndarray, v: np.ndarray, p: int) -> bool:
    if R.shape[0] == 0:
        return not np.any(v % p)
    return la.rank(np.vstack([R, v]), p) == la.rank(R, p)


def _quotient_coords(comp: np.ndarray, R: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    basis = np.vstack([comp, R]) if R.shape[0] else comp
    c = la.solve(basis.T, v, p)
    return c[: comp.shape[0]]


def decompose(M: Module, seed: int = 0) -> list[np.ndarray]:
    """Row bases (in M's coordinates) of indecomposable submodules whose direct sum is M."""
    rng = np.random.default_rng(seed)
    out: list[np.ndarray] = []
    stack: list[tuple[Module, np.ndarray]] = [(M, np.eye(M.dim, dtype=np.int64))]
    while stack:
        X, emb = stack.pop()
        if X.dim == 0:
            continue
        psi = _find_split(X, rng)
        if psi is None:
            out.append(emb)
            continue
        for rows in _fitting_split(X, psi):
            S, inc = submodule(X, rows)
            stack.append((S, la.matmul(inc.matrix, emb, p=M.p)))
    out.sort(key=lambda U: (U.shape[0], tuple(np.flatnonzero(U.any(axis=0))[:1])))
    return out


def split_summand(M: Module, U: np.ndarray) -> Module:
    return submodule(M, U)[0]


def indecomposable_summands(M: Module) -> list[Module]:
    return [split_summand(M, U) for U in decompose(M)]


def is_indecomposable(M: Module) -> bool:
    return M.dim > 0 and len(decompose(M)) == 1


def _iso_indecomposable(X: Module, Y: Module) -> np.ndarray | None:
    """An isomorphism X -> Y for indecomposable X, Y, or None."""
    if X.dim != Y.dim or X.dim_vector != Y.dim_vector:
        return None
    p = X.p
    H = hom_basis(X, Y)
    G = hom_basis(Y, X)
    for phi in H:
        for psi in G:
            comp = (phi @ psi) % p
            if not la.is_nilpotent(comp, p):
                return phi
    return None


@dataclass
class IsoResult:
    isomorphic: bool
    witness: ModuleMap | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def is_isomorphic(M: Module, N: Module) -> IsoResult:
    """Exact isomorphism test; the witness is an invertible map M -> N."""
    if M.A is not N.A:
        raise ModuleError("modules over different algebras")
    if M.dim_vector != N.dim_vector:
        return IsoResult(False)
    if M.dim == 0:
        return IsoResult(True, ModuleMap(M, N, np.zeros((0, 0), dtype=np.int64)))
    p = M.p
    UM, UN = decompose(M), decompose(N)
    if len(UM) != len(UN):
        return IsoResult(False)
    XM = [split_summand(M, U) for U in UM]
    XN = [split_summand(N, U) for U in UN]
    used = [False] * len(XN)
    pieces = []
    for i, X in enumerate(XM):
        found = None
        for j, Y in enumerate(XN):
            if used[j]:
                continue
            phi = _iso_indecomposable(X, Y)
            if phi is not None:
                found = (j, phi)
                break
        if found is None:
            return IsoResult(False)
        used[found[0]] = True
        pieces.append((i, found[0], found[1]))
    SM = np.vstack(UM)
    SN = np.vstack(UN)
    offM = np.cumsum([0] + [U.shape[0] for U in UM])
    offN = np.cumsum([0] + [U.shape[0] for U in UN])
    D = np.zeros((M.dim, N.dim), dtype=np.int64)
    for i, j, phi in pieces:
        D[offM[i] : offM[i + 1], offN[j] : offN[j + 1]] = phi
    W = la.matmul(la.inverse(SM, p), D, SN, p=p)
    return IsoResult(True, ModuleMap(M, N, W))


def iso_classes(mods: list[Module]) -> list[list[int]]:
    """Group indecomposable modules into isomorphism classes (indices)."""
    classes: list[list[int]] = []
    for i, X in enumerate(mods):
        for cl in classes:
            if _iso_indecomposable(mods[cl[0]], X) is not None:
                cl.append(i)
                break
        else:
            classes.append([i])
    return classes


def in_add(X: Module, M: Module) -> bool:
    """Every indecomposable summand of X is isomorphic to one of M."""
    ms = indecomposable_summands(M)
    for Y in indecomposable_summands(X):
        if not any(_iso_indecomposable(Y, Z) is not None for Z in ms):
            return False
    return True


@dataclass
class EndAlgebra:
    """End of a basic module ``sum X_s`` with the summands and hom bases used."""

    algebra: BasedAlgebra
    summands: list[Module]
    homs: dict[tuple[int, int], np.ndarray]
    index: dict[tuple[int, int], np.ndarray]  # (s, t) -> indices of Hom(X_s, X_t) in the basis


def basic_summands(M: Module) -> list[Module]:
    mods = indecomposable_summands(M)
    return [mods[cl[0]] for cl in iso_classes(mods)]


def end_algebra(M: Module, basic: bool = True, verify: bool = False) -> EndAlgebra:
    """``End_A(M)`` with product ``f . g = f after g``.

    With ``basic=True`` one representative of each isomorphism class of
    indecomposable summands is kept.
    """
    p = M.p
    mods = basic_summands(M) if basic else indecomposable_summands(M)
    k = len(mods)
    homs: dict[tuple[int, int], np.ndarray] = {}
    basis_src, basis_tgt, labels = [], [], []
    index: dict[tuple[int, int], np.ndarray] = {}
    idem = []
    pos = 0
    for s in range(k):
        for t in range(k):
            H = hom_basis(mods[s], mods[t])
            if s == t:
                H = _identity_first(H, p)
            homs[(s, t)] = H
            index[(s, t)] = np.arange(pos, pos + H.shape[0])
            if s == t:
                idem.append((pos,))
            pos += H.shape[0]
            # f in Hom(X_s, X_t) equals id_t f id_s: left idempotent t, right idempotent s
            basis_src += [t] * H.shape[0]
            basis_tgt += [s] * H.shape[0]
            labels += [f"h{s}{t}_{i}" for i in range(H.shape[0])]
    d = pos
    mult = np.zeros((d, d, d), dtype=np.int64)
    solvers = {key: _span_solver(H, p) for key, H in homs.items()}
    for s in range(k):
        for t in range(k):
            for u in range(k):
                F, G = homs[(s, t)], homs[(t, u)]
                if F.shape[0] == 0 or G.shape[0] == 0:
                    continue
                # g after f for g in Hom(X_t, X_u), f in Hom(X_s, X_t): matrix F @ G
                prods = np.einsum("aij,bjk->baik", F, G) % p
                coords = solvers[(s, u)](prods.reshape(G.shape[0] * F.shape[0], -1))
                coords = coords.reshape(G.shape[0], F.shape[0], -1)
                gi, fi, ui = index[(t, u)], index[(s, t)], index[(s, u)]
                mult[np.ix_(gi, fi, ui)] = coords
    E = BasedAlgebra(p, mult, basis_src, basis_tgt, idem, None, labels, name="End")
    # radical from the faithful action on the module sum_s X_s
    mats = np.zeros((d, sum(X.dim for X in mods), sum(X.dim for X in mods)), dtype=np.int64)
    off = np.cumsum([0] + [X.dim for X in mods])
    for (s, t), H in homs.items():
        for i, h in zip(index[(s, t)], H):
            # f acts on the left of the module; transpose the row-convention matrix
            mats[i, off[t] : off[t + 1], off[s] : off[s + 1]] = h.T
    R = radical_of_matrix_algebra(mats, p)
    E.__dict__["radical_span"] = R
    if verify:
        _verify_radical(E, R)
    return EndAlgebra(E, mods, homs, index)


def _identity_first(H: np.ndarray, p: int) -> np.ndarray:
    n = H.shape[1]
    I = np.eye(n, dtype=np.int64)
    rest = _complement_mats(I[None], H, p)
    return np.concatenate([I[None], rest]) if rest.shape[0] else I[None]


def _complement_mats(base: np.ndarray, H: np.ndarray, p: int) -> np.ndarray:
    cur = base.reshape(base.shape[0], -1)
    r0 = la.rank(cur, p)
    out = []
    for h in H:
        cand = np.vstack([cur, h.reshape(1, -1)])
        r = la.rank(cand, p)
        if r > r0:
            out.append(h)
            cur, r0 = cand, r
    return np.array(out, dtype=np.int64).reshape(len(out), *H.shape[1:])


def _span_solver(H: np.ndarray, p: int):
    """Coordinates of flattened matrices in the span of the basis H."""
    flat = H.reshape(H.shape[0], H.shape[1] * H.shape[2])
    if flat.shape[0] == 0:
        return lambda V: np.zeros((V.shape[0], 0), dtype=np.int64)
    R, piv, r = la.rref(flat, p)
    Binv = la.inverse(flat[:, piv], p)

    def solve(V: np.ndarray) -> np.ndarray:
        c = la.matmul(V[:, piv], Binv, p=p)
        if not np.array_equal(la.matmul(c, flat, p=p), V % p):
            raise ModuleError("composition left the hom space")
        return c

    return solve


def projective_ideal_rows(EA: EndAlgebra) -> np.ndarray:
    """Rows (in End coordinates) spanning the maps that factor through a projective."""
    E = EA.algebra
    p = E.p
    A = EA.summands[0].A if EA.summands else None
    rows = []
    k = len(EA.summands)
    for s in range(k):
        for t in range(k):
            H = EA.homs[(s, t)]
            if H.shape[0] == 0:
                continue
            solve = _span_solver(H, p)
            prods = []
            for v in range(A.n_vertices):
                P = projective(A, v)
                G = hom_basis(EA.summands[s], P)
                F = hom_basis(P, EA.summands[t])
                if G.shape[0] == 0 or F.shape[0] == 0:
                    continue
                prods.append((np.einsum("aij,bjk->abik", G, F) % p).reshape(-1, H.shape[1] * H.shape[2]))
            if not prods:
                continue
            coords = solve(np.vstack(prods))
            full = np.zeros((coords.shape[0], E.dim), dtype=np.int64)
            full[:, EA.index[(s, t)]] = coords
            rows.append(full)
    if not rows:
        return np.zeros((0, E.dim), dtype=np.int64)
    return la.row_basis(np.vstack(rows), p)[0]


def stable_end_algebra(M: Module) -> BasedAlgebra:
    """End modulo maps factoring through projectives (basic form)."""
    EA = end_algebra(M)
    I = projective_ideal_rows(EA)
    return quotient_algebra(EA.algebra, I, name="StableEnd")
