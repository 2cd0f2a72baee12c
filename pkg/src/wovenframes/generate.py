"""Seeded generation of test frames."""
from __future__ import annotations

import math

import numpy as np

from .errors import FrameError
from .frames import Frame, harmonic_frame, is_frame, optimal_bounds
from .linalg import DEFAULT_TOL, RankTolerance, spectral_norm
from .prng import SplitMix64

MAX_ATTEMPTS = 100
# keeps ||T_f - T_g|| <= target * sqrt(A) after rounding
_SHRINK = 1.0 - 1e-12


class GenerationError(FrameError, RuntimeError):
    """No frame produced within the attempt budget."""


def random_frame(dim: int, count: int, rng: SplitMix64,
                 tol: RankTolerance = DEFAULT_TOL, name: str | None = None) -> Frame:
    """``count`` vectors in ``R**dim`` with i.i.d. uniform[-1, 1) entries.

    Vectors are drawn one after another, coordinates in order. Draws that
    fail to span are discarded, up to ``MAX_ATTEMPTS`` tries.
    """
    if dim < 1 or count < 1:
        raise ValueError("dim and count must be positive")
    for _ in range(MAX_ATTEMPTS):
        f = Frame(rng.symmetric_array((count, dim)), name=name)
        if is_frame(f, tol):
            return f
    raise GenerationError(f"no frame for R^{dim} with {count} vectors in {MAX_ATTEMPTS} attempts")


def tight_frame(dim: int, count: int) -> Frame:
    return harmonic_frame(dim, count)


def perturb(base: Frame, target: float, rng: SplitMix64,
            tol: RankTolerance = DEFAULT_TOL) -> Frame:
    """``base`` moved along a random direction by ``target * sqrt(A_base)`` in spectral norm."""
    if target < 0:
        raise ValueError("target must be nonnegative")
    a = optimal_bounds(base, tol).lower
    for _ in range(MAX_ATTEMPTS):
        direction = rng.symmetric_array((base.dim, base.n))
        norm = spectral_norm(direction)
        if norm > 0:
            step = direction * (target * math.sqrt(a) * _SHRINK / norm)
            return Frame.from_synthesis(base.matrix + step)
    raise GenerationError("could not draw a nonzero perturbation direction")
