"""Homological dimensions with cutoffs and the Gorenstein/Auslander predicates."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import BasedAlgebra
from .modules import (
    Module,
    dual_regular,
    injective,
    is_projective,
    kernel,
    projective_cover,
    projective_resolution,
    regular,
    simple,
)

DEFAULT_CUTOFF = 30
YES, NO, UNDECIDED = "yes", "no", "undecided"


@dataclass(frozen=True)
class ExtendedNat:
    """Either an exact value or a lower bound reached at a cutoff."""

    value: int
    exact: bool = True

    @classmethod
    def at_least(cls, n: int) -> "ExtendedNat":
        return cls(n, False)

    def __str__(self) -> str:
        return f"Exact({self.value})" if self.exact else f"AtLeast({self.value})"

    def to_json(self) -> dict:
        return {"exact": self.value} if self.exact else {"atLeast": self.value}

    def geq(self, k: int) -> str:
        """Three-way answer to ``self >= k``."""
        if self.value >= k:
            return YES
        return NO if self.exact else UNDECIDED


Exact = ExtendedNat
AtLeast = ExtendedNat.at_least


def pdim(M: Module, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if M.dim == 0:
        return Exact(0)
    if cutoff == 0:
        return AtLeast(0)
    res = projective_resolution(M, cutoff - 1)
    return Exact(res.length) if res.complete else AtLeast(cutoff)


def idim(M: Module, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    return pdim(M.dual(), cutoff)


def _worst(values: list[ExtendedNat], cutoff: int) -> ExtendedNat:
    if any(not v.exact for v in values):
        return AtLeast(cutoff)
    return Exact(max((v.value for v in values), default=0))


def gldim(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    vals = []
    for v in range(A.n_vertices):
        d = pdim(simple(A, v), cutoff)
        if not d.exact:
            return AtLeast(cutoff)
        vals.append(d)
    return _worst(vals, cutoff)


def idim_right(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    """Injective dimension of A as a right module."""
    return idim(regular(A), cutoff)


def idim_left(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    """Injective dimension of A as a left module, i.e. pd of DA as a right module."""
    return pdim(dual_regular(A), cutoff)


def domdim_right(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    """Number of leading projective terms of the minimal injective coresolution of A_A."""
    proj_inj = {v: is_projective(injective(A, v)) for v in range(A.n_vertices)}
    # the coresolution is the dual of the minimal resolution of D(A_A) over the opposite algebra;
    # terms are produced one at a time so the search stops at the first non-projective term
    X = regular(A).dual()
    for k in range(cutoff):
        if X.dim == 0:
            return AtLeast(cutoff)
        c = projective_cover(X)
        if not all(proj_inj[v] for v in c.tops):
            return Exact(k)
        X = kernel(c.map)[0]
    return AtLeast(cutoff)


def domdim_left(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF) -> ExtendedNat:
    return domdim_right(A.op(), cutoff)


@dataclass
class Verdict:
    status: str
    value: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == YES


@dataclass
class HomProfile:
    gldim: ExtendedNat
    idim_right: ExtendedNat
    idim_left: ExtendedNat
    domdim_right: ExtendedNat
    domdim_left: ExtendedNat
    iwanaga_gorenstein: str
    notes: list[str] = field(default_factory=list)

    @property
    def idim(self) -> ExtendedNat:
        return self.idim_right

    @property
    def domdim(self) -> ExtendedNat:
        return self.domdim_right

    def to_json(self) -> dict:
        ig = {YES: True, NO: False}.get(self.iwanaga_gorenstein, UNDECIDED)
        return {
            "gldim": self.gldim.to_json(),
            "idim": self.idim_right.to_json(),
            "idimLeft": self.idim_left.to_json(),
            "domdim": self.domdim_right.to_json(),
            "domdimLeft": self.domdim_left.to_json(),
            "ig": ig,
        }


def _ig_status(r: ExtendedNat, l: ExtendedNat) -> str:
    if r.exact and l.exact:
        return YES if r.value == l.value else NO
    if r.exact and not l.exact and l.value > r.value:
        return NO
    if l.exact and not r.exact and r.value > l.value:
        return NO
    return UNDECIDED


def profile(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF) -> HomProfile:
    ir, il = idim_right(A, cutoff), idim_left(A, cutoff)
    dr, dl = domdim_right(A, cutoff), domdim_left(A, cutoff)
    prof = HomProfile(gldim(A, cutoff), ir, il, dr, dl, _ig_status(ir, il))
    if dr != dl:
        prof.notes.append(f"left/right dominant dimensions differ: right {dr}, left {dl}")
    return prof


def is_iwanaga_gorenstein(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF, prof: HomProfile | None = None) -> Verdict:
    prof = prof or profile(A, cutoff)
    if prof.iwanaga_gorenstein == YES:
        return Verdict(YES, prof.idim_right.value)
    return Verdict(prof.iwanaga_gorenstein, None, f"idim right {prof.idim_right}, left {prof.idim_left}")


def is_min_auslander_gorenstein(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF, prof: HomProfile | None = None) -> Verdict:
    """Iwanaga-Gorenstein with ``idim = d <= domdim``; returns d."""
    prof = prof or profile(A, cutoff)
    ig = prof.iwanaga_gorenstein
    if ig != YES:
        return Verdict(ig, None, "not Iwanaga-Gorenstein" if ig == NO else "Gorenstein property undecided at cutoff")
    d = prof.idim_right.value
    if d == 0:
        return Verdict(YES, 0, "selfinjective")
    ans = prof.domdim_right.geq(d)
    return Verdict(ans, d if ans == YES else None, f"idim {d}, domdim {prof.domdim_right}")


def check_min_auslander_gorenstein(A: BasedAlgebra, d: int, cutoff: int = DEFAULT_CUTOFF, prof: HomProfile | None = None) -> Verdict:
    """``idim A <= d <= domdim A`` with A Iwanaga-Gorenstein."""
    prof = prof or profile(A, cutoff)
    if prof.iwanaga_gorenstein != YES:
        return Verdict(prof.iwanaga_gorenstein, None, "Gorenstein property fails or is undecided")
    if prof.idim_right.value > d:
        return Verdict(NO, None, f"idim {prof.idim_right} exceeds {d}")
    ans = prof.domdim_right.geq(d)
    return Verdict(ans, d if ans == YES else None, f"domdim {prof.domdim_right}")


def is_higher_auslander(A: BasedAlgebra, cutoff: int = DEFAULT_CUTOFF, prof: HomProfile | None = None) -> Verdict:
    """``gldim A = g <= domdim A`` with g >= 1; returns ``d = g - 1``."""
    prof = prof or profile(A, cutoff)
    g = prof.gldim
    if not g.exact:
        # a Gorenstein algebra of finite idim below the cutoff has infinite gldim here
        if prof.iwanaga_gorenstein == YES and prof.idim_right.value < g.value:
            return Verdict(NO, None, "infinite global dimension")
        return Verdict(UNDECIDED, None, f"gldim {g}")
    if g.value == 0:
        return Verdict(NO, None, "semisimple")
    ans = prof.domdim_right.geq(g.value)
    return Verdict(ans, g.value - 1 if ans == YES else None, f"gldim {g}, domdim {prof.domdim_right}")


def check_higher_auslander(A: BasedAlgebra, d: int, cutoff: int = DEFAULT_CUTOFF, prof: HomProfile | None = None) -> Verdict:
    """``gldim A <= d + 1 <= domdim A``."""
    prof = prof or profile(A, cutoff)
    g = prof.gldim
    if not g.exact:
        if prof.iwanaga_gorenstein == YES and prof.idim_right.value < g.value:
            return Verdict(NO, None, "infinite global dimension")
        return Verdict(UNDECIDED, None, f"gldim {g}")
    if g.value > d + 1:
        return Verdict(NO, None, f"gldim {g} exceeds {d + 1}")
    ans = prof.domdim_right.geq(d + 1)
    return Verdict(ans, d if ans == YES else None, f"gldim {g}, domdim {prof.domdim_right}")
