"""Decision procedures for twisted fractional Calabi-Yau algebras.

Route (b) is authoritative: A is Iwanaga-Gorenstein and twisted (m, l)-CY
exactly when the replicated algebra ``A^(l-1)`` is minimal Auslander-Gorenstein
of selfinjective dimension ``l + m - 1``.  Route (a) checks directly that
``nu^l`` sends each indecomposable projective to a shifted indecomposable
projective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import homdims as hd
from .algebra import BasedAlgebra, fingerprint, idempotent_truncation, quotient_algebra, replicate
from .complexes import BudgetExhausted, nakayama_power
from .endo import (
    _iso_indecomposable,
    end_algebra,
    in_add,
    indecomposable_summands,
    is_isomorphic,
    iso_classes,
    stable_end_algebra,
)
from .homdims import NO, UNDECIDED, YES, HomProfile, Verdict
from .modules import (
    Module,
    direct_sum,
    dual_regular,
    ext_dim,
    hom_dim,
    injective,
    is_injective,
    is_projective,
    projective,
    projective_resolution,
    regular,
    tau_n,
    tau_n_inverse,
    syzygy,
)
from .stalks import detect_stalk, make_stalk


def default_budget(ell: int, cutoff: int, m: int = 0) -> int:
    return 2 * (ell + m + cutoff)


@dataclass
class ObjectCheck:
    status: str
    m: int | None = None
    sigma: list[int] | None = None
    reason: str = ""


def twisted_cy_object_check(A: BasedAlgebra, ell: int, m: int | None = None, budget: int = 60) -> ObjectCheck:
    """Does ``nu^l P(v) = P(sigma v)[m]`` hold for every vertex v (with one m and a permutation sigma)?"""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    sigma, shift = [], None
    for v in range(A.n_vertices):
        try:
            Q = nakayama_power(A, ell, budget, tops=[v])
        except BudgetExhausted:
            return ObjectCheck(UNDECIDED, reason=f"budget exhausted at vertex {v}")
        degs = Q.degrees()
        if len(degs) != 1 or len(Q.tops(degs[0])) != 1:
            return ObjectCheck(NO, reason=f"nu^{ell} P({v}) is not a single shifted projective: {Q.multiplicities()}")
        d = -degs[0]
        if shift is None:
            shift = d
        elif d != shift:
            return ObjectCheck(NO, reason=f"shifts differ between vertices ({shift} vs {d})")
        sigma.append(Q.tops(degs[0])[0])
    if sorted(sigma) != list(range(A.n_vertices)):
        return ObjectCheck(NO, reason="vertex map is not a permutation")
    if m is not None and shift != m:
        return ObjectCheck(NO, shift, sigma, f"shift {shift} differs from {m}")
    return ObjectCheck(YES, shift, sigma)


@dataclass
class PairResult:
    ell: int
    m: int | None
    route_b: str
    route_a: str
    sigma: list[int] | None
    profile: HomProfile | None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "l": self.ell,
            "m": self.m,
            "routeB": self.route_b,
            "routeA": self.route_a,
            "sigma": self.sigma,
            "replicaProfile": self.profile.to_json() if self.profile else None,
        }


def check_twisted_cy(A: BasedAlgebra, ell: int, cutoff: int = hd.DEFAULT_CUTOFF, budget: int | None = None, route_a: bool = True) -> PairResult:
    if ell < 2:
        raise ValueError("ell must be at least 2")
    B = replicate(A, ell - 1)
    prof = hd.profile(B, cutoff)
    v = hd.is_min_auslander_gorenstein(B, cutoff, prof)
    notes = []
    m = None
    status = v.status
    if status == YES:
        if v.value == 0:
            status = NO
            notes.append("replicated algebra is selfinjective; excluded")
        else:
            m = v.value - ell + 1
            if m < 0:
                status = NO
                notes.append(f"negative m = {m}")
                m = None
    else:
        notes.append(v.reason)
    a_status, sigma = UNDECIDED, None
    pd_da = hd.idim_left(A, cutoff) if route_a and budget is None else None
    if route_a and pd_da is not None and not pd_da.exact:
        # nu^l(A) can only be a shifted projective when nu preserves perfect complexes
        notes.append(f"route a: pd DA is {pd_da}; left undecided")
    elif route_a:
        # each resolution step reaches at most pd(DA) degrees below the complex it resolves
        b = budget if budget is not None else pd_da.value + 2
        oc = twisted_cy_object_check(A, ell, None, b)
        a_status, sigma = oc.status, oc.sigma
        if oc.status == YES and m is not None and oc.m != m:
            a_status = NO
            notes.append(f"object check shift {oc.m} differs from m = {m}")
        if oc.reason:
            notes.append("route a: " + oc.reason)
        if status in (YES, NO) and a_status in (YES, NO) and status != a_status:
            notes.append("FINDING: route (a) and route (b) disagree")
    return PairResult(ell, m, status, a_status, sigma, prof, notes)


@dataclass
class CYCertificate:
    algebra: str
    p: int
    selfinjective: bool
    pairs: list[PairResult]
    cutoff: int
    diagnostics: list[str] = field(default_factory=list)

    @property
    def certified(self) -> list[PairResult]:
        return [r for r in self.pairs if r.route_b == YES]

    @property
    def least(self) -> PairResult | None:
        c = self.certified
        return min(c, key=lambda r: r.ell) if c else None

    @property
    def undecided(self) -> bool:
        return self.least is None and any(r.route_b == UNDECIDED for r in self.pairs)

    def to_json(self) -> dict:
        least = self.least
        return {
            "algebra": self.algebra,
            "p": self.p,
            "selfinjective": self.selfinjective,
            "pairs": [r.to_json() for r in self.pairs],
            "least": {"l": least.ell, "m": least.m} if least else None,
            "cutoff": self.cutoff,
        }


def classify(A: BasedAlgebra, lmax: int = 4, cutoff: int = hd.DEFAULT_CUTOFF, budget: int | None = None, route_a: bool = True) -> CYCertificate:
    if lmax < 2:
        raise ValueError("lmax must be at least 2")
    idim = hd.idim_right(A, cutoff)
    if idim.exact and idim.value == 0:
        oc = twisted_cy_object_check(A, 1, 0, budget or default_budget(1, cutoff)) if route_a else ObjectCheck(UNDECIDED)
        pr = PairResult(1, 0, YES, oc.status, oc.sigma, hd.profile(A, cutoff), ["selfinjective"])
        return CYCertificate(A.name, A.p, True, [pr], cutoff)
    pairs = [check_twisted_cy(A, ell, cutoff, budget, route_a) for ell in range(2, lmax + 1)]
    diag = [f"l={r.ell}: {n}" for r in pairs for n in r.notes]
    return CYCertificate(A.name, A.p, False, pairs, cutoff, diag)


# -- n/2-CY criteria -----------------------------------------------------------


def _has_proj_inj(A: BasedAlgebra) -> bool:
    return any(is_injective(projective(A, v)) for v in range(A.n_vertices))


def precluster_check(A: BasedAlgebra, n: int) -> Verdict:
    """Ext^i(DA, A) = 0 for 1 <= i < n and tau_n^-(A) injective."""
    if n < 1:
        raise ValueError("n must be at least 1")
    RA, DA = regular(A), dual_regular(A)
    for i in range(1, n):
        e = ext_dim(DA, RA, i)
        if e:
            return Verdict(NO, None, f"Ext^{i}(DA, A) has dimension {e}")
    T = tau_n_inverse(RA, n)
    if T.dim and not is_injective(T):
        return Verdict(NO, None, "tau_n^-(A) is not injective")
    if not _has_proj_inj(A) and T.dim:
        if not is_isomorphic(T, DA):
            return Verdict(NO, None, "tau_n^-(A) is not isomorphic to DA")
    return Verdict(YES)


@dataclass
class HalfCYReport:
    n: int
    cond1: str
    cond2: str
    cond3: str
    details: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3

    def to_json(self) -> dict:
        return {"n": self.n, "twistedCY": self.cond1, "precluster": self.cond2, "duplicatedMinAG": self.cond3, "agree": self.agree, **self.details}


def _and(*parts: str) -> str:
    if NO in parts:
        return NO
    if UNDECIDED in parts:
        return UNDECIDED
    return YES


def check_half_cy(A: BasedAlgebra, n: int, cutoff: int = hd.DEFAULT_CUTOFF) -> HalfCYReport:
    """The three equivalent conditions for twisted n/2-CY, evaluated independently."""
    if n < 1:
        raise ValueError("n must be at least 1")
    r = check_twisted_cy(A, 2, cutoff, route_a=False)
    c1 = NO if r.route_b == NO else (YES if r.route_b == YES and r.m == n else (UNDECIDED if r.route_b == UNDECIDED else NO))
    ir, il = hd.idim_right(A, cutoff), hd.idim_left(A, cutoff)
    idim_ok = YES if (ir.exact and il.exact and ir.value == il.value == n) else (UNDECIDED if not (ir.exact or il.exact) else NO)
    hom0 = hom_dim(dual_regular(A), regular(A)) == 0
    pc = precluster_check(A, n)
    c2 = _and(idim_ok, YES if hom0 else NO, pc.status)
    B = replicate(A, 1)
    c3 = hd.check_min_auslander_gorenstein(B, n + 1, cutoff)
    if c3.status == YES and hd.idim_right(B, cutoff).value != n + 1:
        c3 = Verdict(NO, None, "selfinjective dimension differs from n + 1")
    details = {"homDAA": 0 if hom0 else "nonzero", "preclusterReason": pc.reason}
    return HalfCYReport(n, c1, c2, c3.status, details)


# -- orbit criteria ----------------------------------------------------------------


@dataclass
class OrbitReport:
    status: str
    orbits: list[list[str]] = field(default_factory=list)
    reason: str = ""


def _label(A: BasedAlgebra, X: Module, projs: list[Module], injs: list[Module]) -> str:
    for v, P in enumerate(projs):
        if _iso_indecomposable(X, P) is not None:
            return f"P{v + 1}"
    for v, I in enumerate(injs):
        if _iso_indecomposable(X, I) is not None:
            return f"I{v + 1}"
    return "dimvec" + str(X.dim_vector)


def homogeneous_ct_check(A: BasedAlgebra, n: int, cutoff: int = hd.DEFAULT_CUTOFF) -> OrbitReport:
    """A + DA is 2-homogeneous n-cluster tilting (requires gldim A = n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    g = hd.gldim(A, cutoff)
    if not (g.exact and g.value == n):
        raise ValueError(f"precondition: gldim must equal {n}, got {g}")
    M = direct_sum(A, [regular(A), dual_regular(A)])
    for i in range(1, n):
        e = ext_dim(M, M, i)
        if e:
            return OrbitReport(NO, reason=f"Ext^{i}(M, M) has dimension {e}")
    summ = indecomposable_summands(M)
    reps = [summ[c[0]] for c in iso_classes(summ)]
    projs = [projective(A, v) for v in range(A.n_vertices)]
    injs = [injective(A, v) for v in range(A.n_vertices)]

    def find(X: Module) -> int | None:
        for k, R in enumerate(reps):
            if _iso_indecomposable(X, R) is not None:
                return k
        return None

    parent = list(range(len(reps)))

    def root(k):
        while parent[k] != k:
            k = parent[k]
        return k

    escapes = []
    for k, X in enumerate(reps):
        T = tau_n(X, n)
        for Y in indecomposable_summands(T) if T.dim else []:
            j = find(Y)
            if j is None:
                escapes.append(f"tau_{n}({_label(A, X, projs, injs)}) = {_label(A, Y, projs, injs)}")
            else:
                parent[root(j)] = root(k)
    groups: dict[int, list[int]] = {}
    for k in range(len(reps)):
        groups.setdefault(root(k), []).append(k)
    orbits = [[_label(A, reps[k], projs, injs) for k in g_] for g_ in groups.values()]
    if escapes:
        return OrbitReport(NO, orbits, "tau_n leaves add(A + DA): " + "; ".join(escapes))
    bad = [o for o in orbits if len(o) != 2]
    if bad:
        return OrbitReport(NO, orbits, f"orbits of size != 2: {bad}")
    # DA must lie in the closure of A under tau_n^-
    reached = set()
    for P in projs:
        X = P
        for _ in range(cutoff):
            if X.dim == 0:
                break
            for Y in indecomposable_summands(X):
                j = find(Y)
                if j is not None:
                    reached.add(j)
            X = tau_n_inverse(X, n)
    for I in injs:
        j = find(I)
        if j not in reached:
            return OrbitReport(NO, orbits, "DA is not reached by tau_n^- from A")
    return OrbitReport(YES, orbits)


@dataclass
class RFReport:
    status: str
    table: list[dict] = field(default_factory=list)
    reason: str = ""


def n_rf_check(B: BasedAlgebra, n: int, cutoff: int = hd.DEFAULT_CUTOFF) -> RFReport:
    """n-representation-finiteness: gldim <= n and each tau_n^- orbit of a projective ends at an injective covering DB."""
    if n < 1:
        raise ValueError("n must be at least 1")
    g = hd.gldim(B, cutoff)
    if not g.exact:
        return RFReport(NO if hd.idim_right(B, cutoff).exact else UNDECIDED, reason=f"gldim {g}")
    if g.value > n:
        return RFReport(NO, reason=f"gldim {g} exceeds {n}")
    injs = [injective(B, v) for v in range(B.n_vertices)]
    hit = set()
    table = []
    for v in range(B.n_vertices):
        X = projective(B, v)
        dims = []
        found = None
        for k in range(cutoff + 1):
            dims.append(X.dim)
            if X.dim == 0:
                break
            for w, I in enumerate(injs):
                if _iso_indecomposable(X, I) is not None:
                    found = (k, w)
                    break
            if found:
                break
            X = tau_n_inverse(X, n)
        table.append({"projective": v + 1, "dims": dims, "injective": None if not found else found[1] + 1, "steps": None if not found else found[0]})
        if found is None:
            status = UNDECIDED if X.dim else NO
            return RFReport(status, table, f"orbit of P{v + 1} does not reach an injective")
        hit.add(found[1])
    if len(hit) != B.n_vertices:
        return RFReport(NO, table, "not every indecomposable injective is reached")
    return RFReport(YES, table)


def cluster_tilting_module(B: BasedAlgebra, n: int, cutoff: int = hd.DEFAULT_CUTOFF) -> Module:
    """``sum_k tau_n^{-k}(B)`` for an n-representation-finite algebra."""
    parts = []
    for v in range(B.n_vertices):
        X = projective(B, v)
        for _ in range(cutoff + 1):
            if X.dim == 0:
                break
            parts.append(X)
            if is_injective(X):
                break
            X = tau_n_inverse(X, n)
    return direct_sum(B, parts)


# -- stable Auslander extraction ---------------------------------------------------


@dataclass
class ExtractionReport:
    B: BasedAlgebra
    M: Module
    end_matches_replica: bool
    stable_end_matches: bool
    quotient_matches: bool

    @property
    def ok(self) -> bool:
        return self.end_matches_replica and self.stable_end_matches and self.quotient_matches


def proj_inj_vertices(B: BasedAlgebra) -> list[int]:
    return [v for v in range(B.n_vertices) if is_injective(projective(B, v))]


def quotient_by_vertices(B: BasedAlgebra, verts: list[int]) -> BasedAlgebra:
    """``B / BfB`` for f the sum of the listed idempotents."""
    rows = []
    for w in verts:
        left = np.eye(B.dim, dtype=np.int64)[B.idx_tgt[w]]
        right = np.eye(B.dim, dtype=np.int64)[B.idx_src[w]]
        rows.append(B.product_span(left, right))
    I = np.vstack(rows) if rows else np.zeros((0, B.dim), dtype=np.int64)
    return quotient_algebra(B, I)


def stable_auslander_extract(A: BasedAlgebra, ell: int, cutoff: int = hd.DEFAULT_CUTOFF, certified: PairResult | None = None) -> ExtractionReport:
    r = certified or check_twisted_cy(A, ell, cutoff, route_a=False)
    if r.route_b != YES:
        raise ValueError("certification missing: A is not certified at this l")
    if ell + r.m - 2 < 1:
        raise ValueError("requires n = l + m - 2 >= 1")
    B = A if ell == 2 else replicate(A, ell - 2)
    M = direct_sum(B, [regular(B), dual_regular(B)])
    C = replicate(A, ell - 1)
    E = end_algebra(M).algebra
    end_ok = fingerprint(E).same_as(fingerprint(C))
    S = stable_end_algebra(M)
    st_ok = fingerprint(S).same_as(fingerprint(A))
    Q = quotient_by_vertices(C, proj_inj_vertices(C))
    q_ok = Q.dim == A.dim and np.array_equal(Q.mult, A.mult)
    return ExtractionReport(B, M, end_ok, st_ok, q_ok)


# -- stalk property and Serre-formality ----------------------------------------------


@dataclass
class StalkReport:
    status: str
    witnesses: dict[int, list[tuple[int, list[int]]]] = field(default_factory=dict)
    reason: str = ""


def stalk_property_check(A: BasedAlgebra, m: int, cutoff: int = hd.DEFAULT_CUTOFF) -> StalkReport:
    """Syzygies of ``[I]_{m+1}`` over A^(m) pass through stalks at slots m, m-1, ..., 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    B = replicate(A, m)
    wit: dict[int, list[tuple[int, list[int]]]] = {}
    for v in range(A.n_vertices):
        X = make_stalk(B, injective(A, v), m + 1)
        need = m
        found: list[tuple[int, list[int]]] = []
        history: list[Module] = []
        for k in range(1, cutoff + 1):
            X = syzygy(X, 1)
            if X.dim == 0:
                return StalkReport(NO, wit, f"syzygies of [I{v + 1}]_{m + 1} vanish before slot {need} is reached")
            st = detect_stalk(X)
            if st is not None and st[1] == need:
                found.append((k, st[0].dim_vector))
                need -= 1
                if need == 0:
                    break
            for H in reversed(history):
                if H.dim_vector == X.dim_vector and is_isomorphic(H, X):
                    return StalkReport(NO, wit, f"syzygies of [I{v + 1}]_{m + 1} become periodic without reaching slot {need}")
            history.append(X)
        if need:
            return StalkReport(UNDECIDED, wit, f"cutoff reached for I{v + 1}")
        wit[v] = found
    return StalkReport(YES, wit)


def _concentrated(Q) -> bool:
    h = Q.homology_dims()
    return sum(1 for x in h.values() if x) <= 1


def serre_formal_check(A: BasedAlgebra, lo: int, hi: int, budget: int | None = None, cutoff: int = hd.DEFAULT_CUTOFF) -> dict[int, str]:
    """Per i in [lo, hi]: is nu^i(A) a sum of stalk complexes?

    Negative powers are computed over the opposite algebra and dualized, which
    does not change the homology dimensions.
    """
    out = {}
    bounds = {}
    for i in range(lo, hi + 1):
        if i == 0:
            out[i] = YES
            continue
        alg, k = (A, i) if i > 0 else (A.op(), -i + 1)
        if budget is None and id(alg) not in bounds:
            bounds[id(alg)] = hd.idim_left(alg, cutoff)
        b = budget if budget is not None else (bounds[id(alg)].value + 2 if bounds[id(alg)].exact else None)
        if b is None:
            out[i] = UNDECIDED
            continue
        try:
            ok = all(_concentrated(nakayama_power(alg, k, b, tops=[v])) for v in range(A.n_vertices))
        except BudgetExhausted:
            out[i] = UNDECIDED
            continue
        out[i] = YES if ok else NO
    return out


# -- inequality audit ----------------------------------------------------------------


@dataclass
class AuditReport:
    ok: bool
    lower: Fraction
    idim: int
    upper: int
    reason: str = ""


def inequality_audit(A: BasedAlgebra, m: int, ell: int, cutoff: int = hd.DEFAULT_CUTOFF) -> AuditReport:
    d = hd.idim_right(A, cutoff)
    if not d.exact:
        return AuditReport(False, Fraction(m, ell - 1), -1, m, "idim undecided")
    lower = Fraction(m, ell - 1)
    ok = lower <= d.value <= m
    reason = ""
    if ell == 2 and d.value != m:
        ok = False
        reason = "for l = 2 the selfinjective dimension must equal m"
    return AuditReport(ok, lower, d.value, m, reason)
