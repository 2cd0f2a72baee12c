"""
Angle conditions between nullspaces and coordinate-type subspaces.

The stacked operator of a pair ``(f, g)`` acts on ``R**n (+) R**n`` by
``x (+) y -> T_f x + (T_g - T_f) y``. For every subset ``sigma`` the oblique
projection ``Q_sigma = [[I, P_sigma], [0, 0]]`` satisfies
``Q_sigma @ stacked.T = [T_w^T; 0]`` with ``T_w`` the weaving synthesis
matrix, which links the Friedrichs angle between ``N(stacked)`` and
``R(Q_sigma^T)`` to the lower bound of that weaving. A woven pair forces
the supremum of those cosines below 1; the converse is not claimed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAFrame, ShapeMismatch
from .frames import Frame, is_frame
from .linalg import (
    DEFAULT_TOL,
    INTERSECTION_THRESHOLD,
    RankTolerance,
    as_mat,
    friedrichs_cosine,
    gamma,
    null_basis,
    principal_cosines,
    range_basis,
    rank,
    spectral_norm,
)
from .weaving import DEFAULT_CAP, PartitionSet, check_cap, projection_matrix

__all__ = [
    "StackedOperator",
    "ObliqueProjection",
    "stacked_synthesis",
    "oblique_q",
    "woven_angle_sup",
    "riesz_compatibility",
    "gamma_product_bounds",
]


@dataclass(frozen=True, eq=False)
class StackedOperator:
    """``d x 2n`` matrix ``[T_f | T_g - T_f]``."""

    mat: np.ndarray

    @property
    def n(self) -> int:
        return self.mat.shape[1] // 2

    def __call__(self, x, y):
        n = self.n
        return self.mat[:, :n] @ np.asarray(x) + self.mat[:, n:] @ np.asarray(y)


@dataclass(frozen=True, eq=False)
class ObliqueProjection:
    """``2n x 2n`` idempotent ``[[I, P_sigma], [0, 0]]``."""

    mat: np.ndarray
    partition: PartitionSet


def stacked_synthesis(f: Frame, g: Frame) -> StackedOperator:
    if f.matrix.shape != g.matrix.shape:
        raise ShapeMismatch(f"frames have shapes {f.matrix.shape} and {g.matrix.shape}")
    return StackedOperator(np.hstack([f.matrix, g.matrix - f.matrix]))


def oblique_q(p: PartitionSet) -> ObliqueProjection:
    n = p.n
    q = np.zeros((2 * n, 2 * n))
    q[:n, :n] = np.eye(n)
    q[:n, n:] = projection_matrix(p)
    return ObliqueProjection(q, p)


def _sup_over_subsets(n, cosine_for):
    best, arg = -1.0, 0
    for mask in range(1 << n):
        c = cosine_for(PartitionSet(n, mask))
        if c > best:
            best, arg = c, mask
    return best, PartitionSet(n, arg)


def woven_angle_sup(
    f: Frame,
    g: Frame,
    tol: RankTolerance = DEFAULT_TOL,
    *,
    cap: int = DEFAULT_CAP,
    threshold: float = INTERSECTION_THRESHOLD,
) -> tuple[float, PartitionSet]:
    """Largest Friedrichs cosine between ``N(stacked)`` and ``R(Q_sigma^T)`` over all sigma.

    Returns the supremum and the smallest bitmask attaining it. For a woven
    pair the value is below 1.
    """
    for role, fr in (("f", f), ("g", g)):
        if not is_frame(fr, tol):
            raise NotAFrame(f"{role} = {fr!r} is not a frame for R^{fr.dim}")
    t = stacked_synthesis(f, g)
    check_cap(t.n, cap)
    kernel = null_basis(t.mat, tol)

    def cosine(p):
        return friedrichs_cosine(kernel, range_basis(oblique_q(p).mat.T, tol), threshold)

    return _sup_over_subsets(t.n, cosine)


def riesz_compatibility(
    f: Frame,
    tol: RankTolerance = DEFAULT_TOL,
    *,
    cap: int = DEFAULT_CAP,
    threshold: float = INTERSECTION_THRESHOLD,
) -> tuple[float, PartitionSet]:
    """Largest Friedrichs cosine between ``N(T_f)`` and ``R(P_sigma)`` over all sigma."""
    if not is_frame(f, tol):
        raise NotAFrame(f"{f!r} is not a frame for R^{f.dim}")
    check_cap(f.n, cap)
    kernel = null_basis(f.matrix, tol)

    def cosine(p):
        return friedrichs_cosine(kernel, range_basis(projection_matrix(p), tol), threshold)

    return _sup_over_subsets(f.n, cosine)


def gamma_product_bounds(
    a, b, tol: RankTolerance = DEFAULT_TOL, threshold: float = INTERSECTION_THRESHOLD
) -> tuple[float, float, float]:
    """Bracket ``(lower, upper, c)`` for the reduced minimum modulus of ``a @ b``.

    ``c`` is the Friedrichs cosine between ``N(a)`` and ``R(b)``, and
    ``lower = gamma(a) gamma(b) sqrt(1 - c**2)``,
    ``upper = ||a|| ||b|| sqrt(1 - c**2)``.

    The intersection ``R(b) & N(a)`` is sized as ``rank(b) - rank(ab)``
    under ``tol``, the same decision that :func:`gamma` makes for ``ab``, so
    a tiny but nonzero angle is not mistaken for a shared direction.
    ``threshold`` only reaches :func:`friedrichs_cosine` when no cosine
    remains after removing the intersection.

    When ``R(b)`` is a nonzero subspace of ``N(a)`` the product vanishes and
    ``c`` is reported as 1, giving the bracket ``(0, 0)``.
    """
    a, b = as_mat(a), as_mat(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatch(f"cannot compose {a.shape} with {b.shape}")
    kernel = null_basis(a, tol)
    image = range_basis(b, tol)
    shared = image.dim - rank(a @ b, tol)
    cos = principal_cosines(image, kernel)
    if image.dim and shared >= image.dim:
        c = 1.0
    elif 0 <= shared < len(cos):
        c = float(min(1.0, cos[shared]))
    else:
        c = friedrichs_cosine(kernel, image, threshold)
    root = math.sqrt(max(0.0, 1.0 - c * c))
    return gamma(a, tol) * gamma(b, tol) * root, spectral_norm(a) * spectral_norm(b) * root, c
