import numpy as np
import pytest

from conftest import random_frame
from wovenframes.errors import InvalidMatrix, InvalidScale, NotAFrame, ShapeMismatch
from wovenframes.frames import (
    Frame,
    FrameBounds,
    apply_operator,
    canonical_dual,
    example_frame,
    frame_operator,
    harmonic_frame,
    is_frame,
    optimal_bounds,
    scale,
    standard_basis,
    synthesis,
)


def test_synthesis_examples(fm4):
    np.testing.assert_array_equal(synthesis(standard_basis(2)), np.eye(2))
    np.testing.assert_array_equal(synthesis(fm4), np.diag([2.0, 1.0]))
    np.testing.assert_array_equal(synthesis(Frame([[1, 0], [0, 1], [1, 1]])),
                                  [[1, 0, 1], [0, 1, 1]])


def test_frame_operator_examples(fm4):
    np.testing.assert_array_equal(frame_operator(standard_basis(2)), np.eye(2))
    np.testing.assert_array_equal(frame_operator(fm4), np.diag([4.0, 1.0]))
    np.testing.assert_array_equal(frame_operator(Frame([[1], [1]])), [[2.0]])


def test_optimal_bounds_examples(fm4, mercedes):
    b = optimal_bounds(fm4)
    assert (b.lower, b.upper) == (pytest.approx(1.0, abs=1e-12), pytest.approx(4.0, abs=1e-12))
    b = optimal_bounds(standard_basis(3))
    assert (b.lower, b.upper) == (1.0, 1.0)
    # S = (3/2) I computed directly
    np.testing.assert_allclose(frame_operator(mercedes), 1.5 * np.eye(2), atol=1e-14)
    b = optimal_bounds(mercedes)
    assert b.lower == pytest.approx(1.5, abs=1e-12) and b.upper == pytest.approx(1.5, abs=1e-12)


def test_optimal_bounds_not_a_frame():
    with pytest.raises(NotAFrame):
        optimal_bounds(Frame([[1, 0], [1, 0]]))


@pytest.mark.parametrize("vectors, expected", [
    ([[1, 0], [0, 1]], True),
    ([[1, 0], [1, 0]], False),
    ([[1, 0], [0, 1], [1, 1]], True),
])
def test_is_frame(vectors, expected):
    assert is_frame(Frame(vectors)) is expected


def test_empty_family_is_not_a_frame():
    assert not is_frame(Frame([], dim=2))


def test_canonical_dual_examples(fm4, mercedes):
    assert canonical_dual(standard_basis(2)).allclose(standard_basis(2))
    assert canonical_dual(fm4).allclose(Frame([[0.5, 0], [0, 1]]))
    assert canonical_dual(mercedes).allclose(scale(mercedes, 2 / 3))
    with pytest.raises(NotAFrame):
        canonical_dual(Frame([[1, 0], [2, 0]]))


def test_scale_examples(fm4):
    assert scale(standard_basis(2), 2).allclose(Frame([[2, 0], [0, 2]]))
    assert scale(fm4, 1).allclose(fm4)
    assert scale(canonical_dual(fm4), 4 / 3).allclose(Frame([[1 / 1.5, 0], [0, 4 / 3]]))
    for bad in (0, -1.0):
        with pytest.raises(InvalidScale):
            scale(fm4, bad)


def test_scale_squares_bounds(rng):
    f = random_frame(rng, 3, 5)
    b, b2 = optimal_bounds(f), optimal_bounds(scale(f, 1.7))
    assert b2.lower == pytest.approx(1.7**2 * b.lower, rel=1e-12)
    assert b2.upper == pytest.approx(1.7**2 * b.upper, rel=1e-12)


def test_apply_operator_examples(fm4):
    assert apply_operator(np.eye(2), fm4).allclose(fm4)
    assert apply_operator(np.diag([1, 0.5]), fm4).allclose(Frame([[2, 0], [0, 0.5]]))
    out = apply_operator(np.diag([0.0, 1.0]), standard_basis(2))
    assert out.allclose(Frame([[0, 0], [0, 1]])) and not is_frame(out)
    with pytest.raises(ShapeMismatch):
        apply_operator(np.eye(3), fm4)


def test_apply_operator_is_composition(rng):
    f = random_frame(rng, 3, 6)
    t = rng.standard_normal((3, 3))
    np.testing.assert_array_equal(synthesis(apply_operator(t, f)), t @ synthesis(f))


def test_frame_validation():
    with pytest.raises(InvalidMatrix):
        Frame([[1.0, np.nan]])
    with pytest.raises(ShapeMismatch):
        Frame([[1.0, 2.0]], dim=3)
    f = Frame([[1, 2], [3, 4], [5, 6]])
    assert (f.dim, f.n, len(f)) == (2, 3, 3)
    np.testing.assert_array_equal(f[1], [3, 4])
    with pytest.raises(ValueError):
        f.matrix[0, 0] = 7


def test_frame_bounds_validation():
    with pytest.raises(ValueError):
        FrameBounds(0.0, 1.0)
    with pytest.raises(ValueError):
        FrameBounds(2.0, 1.0)
    assert FrameBounds(1.0, 4.0).ratio == 4.0


@pytest.mark.parametrize("d, n", [(1, 3), (2, 3), (2, 5), (3, 3), (3, 7), (4, 4), (4, 9), (5, 8)])
def test_harmonic_frames_are_tight(d, n):
    f = harmonic_frame(d, n)
    b = optimal_bounds(f)
    assert b.upper == pytest.approx(b.lower, rel=1e-12)
    expected = 1.0 if (n == d and d % 2 == 0) else n / 2
    assert b.lower == pytest.approx(expected, rel=1e-12)


def test_harmonic_2_3_is_mercedes(mercedes):
    assert harmonic_frame(2, 3).allclose(mercedes)


def test_example_frame_bounds():
    b = optimal_bounds(example_frame(7.0, d=3))
    assert b.lower == pytest.approx(1.0) and b.upper == pytest.approx(7.0)


@pytest.mark.parametrize("seed", range(20))
def test_bounds_are_extreme_eigenvalues(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 5))
    f = random_frame(rng, d, int(rng.integers(d, 9)))
    ev = np.linalg.eigvalsh(frame_operator(f))
    b = optimal_bounds(f)
    assert b.lower == pytest.approx(ev[0], abs=1e-8)
    assert b.upper == pytest.approx(ev[-1], abs=1e-8)


@pytest.mark.parametrize("seed", range(20))
def test_reconstruction_and_dual_involution(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 5))
    f = random_frame(rng, d, int(rng.integers(d, 9)))
    dual = canonical_dual(f)
    x = rng.standard_normal(d)
    # x = sum <x, f_i> S^-1 f_i = sum <x, S^-1 f_i> f_i
    np.testing.assert_allclose(dual.matrix @ (f.matrix.T @ x), x, atol=1e-8)
    np.testing.assert_allclose(f.matrix @ (dual.matrix.T @ x), x, atol=1e-8)
    assert canonical_dual(dual).allclose(f, atol=1e-8)
