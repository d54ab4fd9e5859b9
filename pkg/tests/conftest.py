import functools

import numpy as np
import pytest

from fraccy import fixtures
from fraccy.algebra import replicate
from fraccy.modules import Module, generated_submodule_rows, projective_sum, quotient

ALL_FIXTURES = sorted(fixtures.FIXTURES)


@functools.lru_cache(maxsize=None)
def algebra(name: str):
    return fixtures.get(name).algebra()


@functools.lru_cache(maxsize=None)
def replica(name: str, m: int):
    return replicate(algebra(name), m)


def random_module(A, rng: np.random.Generator, max_tops: int = 2) -> Module:
    """A random quotient of a small projective, or the dual of one over the opposite algebra."""
    use_op = rng.random() < 0.5
    R = A.op() if use_op else A
    tops = [int(v) for v in rng.integers(0, R.n_vertices, size=int(rng.integers(1, max_tops + 1)))]
    P = projective_sum(R, tops)
    k = int(rng.integers(0, 3))
    vecs = rng.integers(0, R.p, size=(k, P.dim)) if P.dim else np.zeros((0, 0), dtype=np.int64)
    Q, _ = quotient(P, generated_submodule_rows(P, vecs))
    return Q.dual() if use_op else Q


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
