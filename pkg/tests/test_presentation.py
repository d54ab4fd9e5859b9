import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraccy import fixtures
from fraccy.presentation import (
    BuildError,
    ParseError,
    QuiverPresentation,
    build_algebra,
    parse,
    serialize,
    tokenize,
)

from conftest import ALL_FIXTURES


def test_tokenize_skips_comments():
    kinds = [t.kind for t in tokenize("a # comment\n  b: 12")]
    assert kinds == ["word", "word", "sym", "int", "eof"]


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_fixture_dimensions(name):
    fx = fixtures.get(name)
    A = fx.algebra()
    assert A.dim == fx.expected["dim"]
    assert A.p == 3
    assert A.check_associative() and A.check_idempotents()


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_fixture_roundtrip(name):
    P = fixtures.get(name).presentation()
    assert parse(serialize(P)) == P


def test_p_override():
    assert fixtures.get("a3lin").algebra(p=7).p == 7


def test_basis_labels_and_commutativity_relation():
    A = build_algebra(parse("algebra t over GF(5)\nvertices: 1\narrows: x: 1 -> 1; y: 1 -> 1\nrelations: x*y - 2*y*x; x*x; y*y"))
    assert A.dim == 4
    assert A.labels[:1] == ["e1"]
    x, y = A.labels.index("x"), A.labels.index("y")
    xy = A.multiply(A.basis_vector(x), A.basis_vector(y))
    yx = A.multiply(A.basis_vector(y), A.basis_vector(x))
    assert np.array_equal(xy, (2 * yx) % 5)


def test_like_terms_combine():
    P = parse("algebra t over GF(3)\nvertices: 1 2 3\narrows: a: 1 -> 2; b: 2 -> 3\nrelations: a*b + 2*a*b")
    assert P.relations == []


@pytest.mark.parametrize(
    "src, line, col",
    [
        ("algebra t over GF(5)\nvertices 1", 2, 1),
        ("algebra t over GF(4)\nvertices: 1", 1, 19),
        ("algebra t over GF(5)\nvertices: 1 2\narrows: a: 1 -> 3", 3, 17),
        ("algebra t over GF(5)\nvertices: 1 2\narrows: a: 1 -> 2; b: 1 -> 2\nrelations: a*b", 4, 12),
        ("algebra t over GF(5)\nvertices: 1 2\narrows: a: 1 -> 2; c: 1 -> 2\nrelations: a - c", 4, 12),
    ],
)
def test_parse_errors_have_positions(src, line, col):
    with pytest.raises(ParseError) as e:
        parse(src)
    assert (e.value.line, e.value.col) == (line, col)


def test_infinite_dimensional_rejected():
    with pytest.raises(BuildError):
        build_algebra(parse("algebra t over GF(5)\nvertices: 1\narrows: x: 1 -> 1"))


@st.composite
def presentations(draw):
    p = draw(st.sampled_from([2, 3, 5, 7]))
    n = draw(st.integers(1, 4))
    verts = [f"v{i}" for i in range(n)]
    k = draw(st.integers(0, 5))
    arrows = [(f"a{j}", draw(st.sampled_from(verts)), draw(st.sampled_from(verts))) for j in range(k)]
    rels = []
    by_ends: dict = {}
    for _ in range(draw(st.integers(0, 6)) if arrows else 0):
        path = [draw(st.sampled_from(arrows))]
        for _ in range(draw(st.integers(1, 3))):
            nxt = [a for a in arrows if a[1] == path[-1][2]]
            if not nxt:
                break
            path.append(draw(st.sampled_from(nxt)))
        if len(path) >= 2:
            by_ends.setdefault((path[0][1], path[-1][2]), set()).add(tuple(a[0] for a in path))
    for paths in by_ends.values():
        paths = sorted(paths)
        chosen = draw(st.lists(st.sampled_from(paths), min_size=1, max_size=3, unique=True))
        rels.append([(draw(st.integers(1, p - 1)), q) for q in chosen])
    return QuiverPresentation(draw(st.sampled_from(["q", "alg_1", "X"])), p, verts, arrows, rels)


@settings(max_examples=150, deadline=None)
@given(presentations())
def test_serialize_parse_roundtrip(P):
    Q = parse(serialize(P))
    assert Q.name == P.name and Q.p == P.p and Q.vertices == P.vertices and Q.arrows == P.arrows
    norm = lambda rels: sorted(sorted(r) for r in rels)
    assert norm(Q.relations) == norm(P.relations)
