"""Modules over a replicated algebra built from, or restricted to, its diagonal slots."""

from __future__ import annotations

import numpy as np

from .algebra import BasedAlgebra
from .modules import Module, ModuleError, injective_envelope, projective_cover, projective_sum


def _base(B: BasedAlgebra) -> tuple[BasedAlgebra, int]:
    if "base" not in B.meta:
        raise ModuleError("algebra is not a replicated algebra")
    return B.meta["base"], B.meta["m"]


def make_stalk(B: BasedAlgebra, M: Module, k: int) -> Module:
    """``[M]_k``: M placed in diagonal slot k (1-based)."""
    A, m = _base(B)
    if not 1 <= k <= m + 1:
        raise ModuleError(f"slot {k} out of range 1..{m + 1}")
    if M.A is not A:
        raise ModuleError("module is not over the base algebra")
    act = np.zeros((B.dim, M.dim, M.dim), dtype=np.int64)
    act[B.meta["diag"][k]] = M.act
    return Module(B, act, M.grading + (k - 1) * A.n_vertices)


def make_glued_projective(B: BasedAlgebra, tops: list[int], k: int) -> Module:
    """``[nu P, P]_k`` for ``P = sum P(tops)``: the projective ``sum P(v, k + 1)`` of B."""
    A, m = _base(B)
    if not 1 <= k <= m:
        raise ModuleError(f"slot {k} out of range 1..{m}")
    return projective_sum(B, [v + k * A.n_vertices for v in tops])


def make_glued(B: BasedAlgebra, M: Module, k: int) -> Module:
    """``[nu M, M]_k`` for projective M, or ``[M, nu^- M]_k`` for injective M (up to isomorphism)."""
    cov = projective_cover(M)
    if cov.map.source.dim == M.dim:
        return make_glued_projective(B, cov.tops, k)
    socs, env = injective_envelope(M)
    if env.target.dim == M.dim:
        return make_glued_projective(B, socs, k)
    raise ModuleError("glued constructor needs a projective or injective module")


def slot_of_vertex(B: BasedAlgebra, w: int) -> int:
    A, _ = _base(B)
    return w // A.n_vertices + 1


def slot_support(X: Module) -> list[int]:
    B = X.A
    return sorted({slot_of_vertex(B, int(w)) for w in X.grading})


def slot_part(X: Module, k: int) -> Module:
    """The A-module sitting in slot k of a module over the replicated algebra."""
    B = X.A
    A, _ = _base(B)
    nv = A.n_vertices
    idx = np.flatnonzero((X.grading >= (k - 1) * nv) & (X.grading < k * nv))
    act = X.act[np.ix_(B.meta["diag"][k], idx, idx)]
    return Module(A, act, X.grading[idx] - (k - 1) * nv)


def detect_stalk(X: Module) -> tuple[Module, int] | None:
    """``(M, k)`` when X is concentrated in the single slot k (the zero module gives None)."""
    slots = slot_support(X)
    if len(slots) != 1:
        return None
    k = slots[0]
    return slot_part(X, k), k
