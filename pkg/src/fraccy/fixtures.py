"""Named example presentations with the results expected of them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .presentation import QuiverPresentation, build_algebra, parse


@dataclass
class Fixture:
    name: str
    source: str
    expected: dict = field(default_factory=dict)

    def presentation(self) -> QuiverPresentation:
        return parse(self.source)

    def algebra(self, p: int | None = None):
        P = self.presentation()
        if p is not None:
            P.p = p
        return build_algebra(P)


FIXTURES: dict[str, Fixture] = {}


def _add(name: str, source: str, **expected) -> None:
    FIXTURES[name] = Fixture(name, source.strip() + "\n", expected)


_add(
    "k",
    """
algebra k over GF(3)
vertices: 1
""",
    dim=1,
    cy=(0, 1),
    selfinjective=True,
)

_add(
    "a2lin",
    """
algebra a2lin over GF(3)
vertices: 1 2
arrows: a: 1 -> 2
""",
    dim=3,
    cy=(1, 3),
)

_add(
    "a3lin",
    """
algebra a3lin over GF(3)
vertices: 1 2 3
arrows: a: 1 -> 2; b: 2 -> 3
""",
    dim=6,
    cy=(2, 4),
)

_add(
    "a3nonlin",
    """
algebra a3nonlin over GF(3)
vertices: 1 2 3
arrows: a: 1 -> 2; b: 3 -> 2
""",
    dim=5,
    cy=(1, 2),
)

_add(
    "d4rad2",
    """
# radical square zero algebra on a D4 quiver with arrows out of the centre
algebra d4rad2 over GF(3)
vertices: 1 2 3 4
arrows: a: 1 -> 2; b: 2 -> 3; c: 2 -> 4
relations: a*b; a*c
""",
    dim=7,
    cy=(2, 3),
)

_add(
    "loop",
    """
algebra loop over GF(3)
vertices: 1 2
arrows: a: 1 -> 1; b: 1 -> 2
relations: a*a
""",
    dim=5,
    cy=(1, 2),
)

_add(
    "a5rel",
    """
algebra a5rel over GF(3)
vertices: 1 2 3 4 5
arrows: a1: 1 -> 2; a2: 2 -> 3; a3: 3 -> 4; a4: 4 -> 5
relations: a1*a2*a3*a4
""",
    dim=14,
    rf=2,
    cy=(6, 8),
)

_add(
    "dualnumbers",
    """
algebra dualnumbers over GF(3)
vertices: 1
arrows: x: 1 -> 1
relations: x*x
""",
    dim=2,
    cy=(0, 1),
    selfinjective=True,
)


def get(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(sorted(FIXTURES))}") from None
