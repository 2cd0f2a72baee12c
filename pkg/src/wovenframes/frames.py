"""
Finite frames for ``R**d`` and the operators attached to them.

A :class:`Frame` is an ordered list of ``n`` vectors in ``R**d`` (indexed
from 0) stored column-wise as its ``d x n`` synthesis matrix. Any finite
list is accepted, including rank-deficient ones; :func:`is_frame` decides
the frame property on demand.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrix, InvalidScale, NotAFrame, ShapeMismatch
from .linalg import DEFAULT_TOL, RankTolerance, as_mat, gamma, rank, spectral_norm

__all__ = [
    "Frame",
    "FrameBounds",
    "synthesis",
    "analysis",
    "frame_operator",
    "optimal_bounds",
    "is_frame",
    "canonical_dual",
    "scale",
    "apply_operator",
    "standard_basis",
    "example_frame",
    "harmonic_frame",
]


@dataclass(frozen=True, eq=False)
class Frame:
    """Ordered sequence of ``n`` vectors in ``R**dim``.

    Construct from a list of vectors, or with :meth:`from_synthesis` from a
    ``dim x n`` matrix whose columns are the vectors.
    """

    matrix: np.ndarray
    name: str | None = None

    def __init__(self, vectors, name: str | None = None, *, dim: int | None = None):
        v = np.asarray(vectors, dtype=np.float64)
        if v.ndim == 1 and v.size == 0 and dim is not None:
            v = v.reshape(0, dim)
        if v.ndim != 2:
            raise InvalidMatrix("vectors must form a 2-D array (one row per vector)")
        if dim is not None and v.shape[1] != dim:
            raise ShapeMismatch(f"vectors have length {v.shape[1]}, expected {dim}")
        if not np.all(np.isfinite(v)):
            raise InvalidMatrix("frame vectors have non-finite entries")
        m = np.ascontiguousarray(v.T)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "name", name)

    @classmethod
    def from_synthesis(cls, t, name: str | None = None) -> "Frame":
        return cls(as_mat(t).T, name=name)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def vectors(self) -> np.ndarray:
        """The vectors as rows, shape ``(n, dim)``."""
        return self.matrix.T

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.matrix[:, i]

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Frame{label} dim={self.dim} n={self.n}>"

    def allclose(self, other: "Frame", atol: float = 1e-9) -> bool:
        return self.matrix.shape == other.matrix.shape and np.allclose(
            self.matrix, other.matrix, rtol=0, atol=atol
        )


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float

    def __post_init__(self):
        if not (0 < self.lower <= self.upper):
            raise ValueError(f"need 0 < lower <= upper, got {self.lower}, {self.upper}")

    @property
    def ratio(self) -> float:
        return self.upper / self.lower


def synthesis(f: Frame) -> np.ndarray:
    """``d x n`` matrix sending the i-th standard basis vector to ``f_i``."""
    return f.matrix


def analysis(f: Frame) -> np.ndarray:
    return f.matrix.T


def frame_operator(f: Frame) -> np.ndarray:
    t = f.matrix
    return t @ t.T


def is_frame(f: Frame, tol: RankTolerance = DEFAULT_TOL) -> bool:
    return f.n > 0 and rank(f.matrix, tol) == f.dim


def _require_frame(f: Frame, tol: RankTolerance):
    if not is_frame(f, tol):
        raise NotAFrame(f"{f!r} does not span R^{f.dim}")


def optimal_bounds(f: Frame, tol: RankTolerance = DEFAULT_TOL) -> FrameBounds:
    """Optimal bounds ``A = gamma(T)**2`` and ``B = ||T||**2`` of the synthesis matrix."""
    _require_frame(f, tol)
    return FrameBounds(gamma(f.matrix, tol) ** 2, spectral_norm(f.matrix) ** 2)


def canonical_dual(f: Frame, tol: RankTolerance = DEFAULT_TOL) -> Frame:
    """The frame ``{S^{-1} f_i}``."""
    _require_frame(f, tol)
    s = frame_operator(f)
    return Frame.from_synthesis(np.linalg.solve(s, f.matrix))


def scale(f: Frame, alpha: float) -> Frame:
    if not alpha > 0:
        raise InvalidScale(f"scale factor must be positive, got {alpha}")
    return Frame.from_synthesis(alpha * f.matrix)


def apply_operator(t, f: Frame) -> Frame:
    """The family ``{t @ f_i}``."""
    t = as_mat(t)
    if t.shape != (f.dim, f.dim):
        raise ShapeMismatch(f"operator shape {t.shape} does not act on R^{f.dim}")
    return Frame.from_synthesis(t @ f.matrix)


def standard_basis(d: int) -> Frame:
    return Frame.from_synthesis(np.eye(d), name=f"E{d}")


def example_frame(m: float, d: int = 2) -> Frame:
    """Orthonormal basis of ``R**d`` with the first vector stretched to norm ``sqrt(m)``.

    Has bounds ``A = 1``, ``B = m`` for ``m >= 1``.
    """
    diag = np.ones(d)
    diag[0] = np.sqrt(m)
    return Frame.from_synthesis(np.diag(diag), name=f"F_M(M={m:g})")


def harmonic_frame(d: int, n: int) -> Frame:
    """Real harmonic tight frame of ``n`` vectors in ``R**d``.

    Rows are ``cos(2 pi j k / n)``, ``sin(2 pi j k / n)`` for frequencies
    ``k = 1..d//2`` (plus a constant row ``1/sqrt(2)`` when ``d`` is odd), so
    ``S = (n/2) I``. When ``n == d`` is even the harmonic rows are not
    orthogonal and the standard basis is returned instead.
    """
    if d < 1 or n < d:
        raise ValueError("need 1 <= d <= n")
    if n == d and d % 2 == 0:
        return standard_basis(d)
    j = np.arange(n)
    rows = []
    if d % 2:
        rows.append(np.full(n, np.sqrt(0.5)))
    for k in range(1, d // 2 + 1):
        rows.append(np.cos(2 * np.pi * j * k / n))
        rows.append(np.sin(2 * np.pi * j * k / n))
    return Frame.from_synthesis(np.array(rows), name=f"harmonic({d},{n})")
