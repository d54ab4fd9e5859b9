import numpy as np
import pytest

from fraccy.modules import ModuleError, hom_dim, injective, is_injective, is_projective, projective, simple
from fraccy.stalks import detect_stalk, make_glued, make_glued_projective, make_stalk, slot_part, slot_support

from conftest import ALL_FIXTURES, algebra, random_module, replica


@pytest.mark.parametrize("name", ALL_FIXTURES)
@pytest.mark.parametrize("m", [1, 2])
def test_stalk_roundtrip(name, m, rng):
    A, B = algebra(name), replica(name, m)
    for k in range(1, m + 2):
        M = random_module(A, rng)
        X = make_stalk(B, M, k)
        assert X.check()
        if M.dim:
            S, slot = detect_stalk(X)
            assert slot == k and np.array_equal(S.act, M.act)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_hom_embedding_identity(name, rng):
    A, B = algebra(name), replica(name, 2)
    for _ in range(6):
        M, N = random_module(A, rng), random_module(A, rng)
        k = int(rng.integers(1, 4))
        assert hom_dim(make_stalk(B, M, k), make_stalk(B, N, k)) == hom_dim(M, N)


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_glued_projectives_are_projective_injective(name):
    A, B = algebra(name), replica(name, 2)
    for k in (1, 2):
        for v in range(A.n_vertices):
            X = make_glued_projective(B, [v], k)
            assert is_projective(X) and is_injective(X)
            assert set(slot_support(X)) <= {k, k + 1} and k + 1 in slot_support(X)
            assert slot_part(X, k + 1).dim == projective(A, v).dim
            assert slot_part(X, k).dim == injective(A, v).dim
            if not is_projective(injective(A, v)):
                assert make_glued(B, injective(A, v), k).dim == X.dim


def test_two_slot_module_is_not_a_stalk():
    A, B = algebra("a2lin"), replica("a2lin", 1)
    assert detect_stalk(make_glued_projective(B, [0], 1)) is None


def test_slot_range_checked():
    A, B = algebra("a2lin"), replica("a2lin", 1)
    with pytest.raises(ModuleError):
        make_stalk(B, simple(A, 0), 3)
    with pytest.raises(ModuleError):
        make_stalk(B, simple(algebra("a3lin"), 0), 1)
