import numpy as np
import pytest

from wovenframes import Frame, example_frame, standard_basis


def random_frame(rng, d, n):
    while True:
        f = Frame(rng.uniform(-1, 1, size=(n, d)))
        if np.linalg.matrix_rank(f.matrix) == d:
            return f


def random_low_rank(rng, rows, cols, r):
    if r == 0:
        return np.zeros((rows, cols))
    return rng.standard_normal((rows, r)) @ rng.standard_normal((r, cols))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def e2():
    return standard_basis(2)


@pytest.fixture
def fm4():
    return example_frame(4)


@pytest.fixture
def swapped():
    """The pair ({e1, e2}, {e2, e1}), which is not woven."""
    return Frame([[1, 0], [0, 1]]), Frame([[0, 1], [1, 0]])


@pytest.fixture
def mercedes():
    k = np.arange(3)
    return Frame(np.column_stack([np.cos(2 * np.pi * k / 3), np.sin(2 * np.pi * k / 3)]))


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
