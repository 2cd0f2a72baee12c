"""
Dense real linear algebra used throughout the package.

Matrices are plain two-dimensional ``float64`` numpy arrays. Subspaces are
carried by an orthonormal basis (:class:`Subspace`), and every decision
about numerical rank goes through a :class:`RankTolerance`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AmbientMismatch, InvalidMatrix

__all__ = [
    "RankTolerance",
    "Subspace",
    "DEFAULT_TOL",
    "INTERSECTION_THRESHOLD",
    "as_mat",
    "svd",
    "singular_values",
    "rank",
    "pinv",
    "gamma",
    "spectral_norm",
    "null_basis",
    "range_basis",
    "ortho_proj",
    "orthogonal_complement",
    "principal_cosines",
    "friedrichs_cosine",
    "gap",
]

#: Principal cosines at or above ``1 - INTERSECTION_THRESHOLD`` are taken to
#: belong to the intersection of the two subspaces.
INTERSECTION_THRESHOLD = 1e-8

_ORTHONORMAL_ATOL = 1e-10


@dataclass(frozen=True)
class RankTolerance:
    """Cutoff rule for numerical rank.

    A singular value counts as nonzero when it is strictly greater than
    ``max(absolute, relative * s_max * max(rows, cols))``.
    """

    absolute: float = 0.0
    relative: float = float(np.finfo(np.float64).eps)

    def __post_init__(self):
        if not (self.absolute >= 0 and self.relative >= 0):
            raise ValueError("tolerances must be nonnegative")

    def cutoff(self, s_max: float, shape: tuple[int, int]) -> float:
        return max(self.absolute, self.relative * s_max * max(shape))


DEFAULT_TOL = RankTolerance()


def as_mat(m) -> np.ndarray:
    """Coerce ``m`` to a finite 2-D float array, raising :class:`InvalidMatrix`."""
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2:
        raise InvalidMatrix(f"expected a 2-D matrix, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise InvalidMatrix("matrix has non-finite entries")
    return a


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``R**ambient_dim`` given by an orthonormal basis.

    ``basis`` has shape ``(ambient_dim, k)``; ``k == 0`` is the trivial
    subspace.
    """

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=np.float64)
        if b.ndim != 2 or b.shape[0] != self.ambient_dim:
            raise AmbientMismatch(
                f"basis shape {b.shape} does not match ambient_dim={self.ambient_dim}"
            )
        if b.shape[1] > self.ambient_dim:
            raise InvalidMatrix("more basis vectors than ambient dimension")
        if not np.allclose(b.T @ b, np.eye(b.shape[1]), rtol=0, atol=_ORTHONORMAL_ATOL):
            raise InvalidMatrix("basis columns are not orthonormal")
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @classmethod
    def span(cls, vectors) -> "Subspace":
        """Subspace spanned by the columns of ``vectors`` (any spanning set)."""
        return range_basis(as_mat(vectors))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim))

    @classmethod
    def trivial(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((ambient_dim, 0)))


def svd(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin singular value decomposition ``m = U @ diag(s) @ V.T``.

    Returns
    -------
    U : (rows, k) array with orthonormal columns
    s : (k,) nonincreasing nonnegative singular values, ``k = min(rows, cols)``
    V : (cols, k) array with orthonormal columns
    """
    a = as_mat(m)
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    return u, s, vt.T


def singular_values(m) -> np.ndarray:
    a = as_mat(m)
    if a.size == 0:
        return np.zeros(0)
    return np.linalg.svd(a, compute_uv=False)


def _rank_from_s(s: np.ndarray, shape, tol: RankTolerance) -> int:
    if s.size == 0:
        return 0
    return int(np.count_nonzero(s > tol.cutoff(float(s[0]), shape)))


def rank(m, tol: RankTolerance = DEFAULT_TOL) -> int:
    a = as_mat(m)
    return _rank_from_s(singular_values(a), a.shape, tol)


def pinv(m, tol: RankTolerance = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse; singular values at or below the cutoff are dropped."""
    a = as_mat(m)
    u, s, v = svd(a)
    r = _rank_from_s(s, a.shape, tol)
    return (v[:, :r] / s[:r]) @ u[:, :r].T


def gamma(m, tol: RankTolerance = DEFAULT_TOL) -> float:
    """Reduced minimum modulus: the smallest singular value above the cutoff.

    The zero matrix gets ``0.0`` (not ``inf``); check :func:`rank` when
    surjectivity matters.
    """
    a = as_mat(m)
    s = singular_values(a)
    r = _rank_from_s(s, a.shape, tol)
    return float(s[r - 1]) if r else 0.0


def spectral_norm(m) -> float:
    s = singular_values(m)
    return float(s[0]) if s.size else 0.0


def null_basis(m, tol: RankTolerance = DEFAULT_TOL) -> Subspace:
    """Orthonormal basis of ``{x : m @ x = 0}`` inside ``R**cols``."""
    a = as_mat(m)
    rows, cols = a.shape
    if a.size == 0:
        return Subspace.full(cols)
    _, s, vt = np.linalg.svd(a, full_matrices=True)
    r = _rank_from_s(s, a.shape, tol)
    return Subspace(cols, vt[r:].T.copy())


def range_basis(m, tol: RankTolerance = DEFAULT_TOL) -> Subspace:
    """Orthonormal basis of the column space of ``m`` inside ``R**rows``."""
    a = as_mat(m)
    if a.size == 0:
        return Subspace.trivial(a.shape[0])
    u, s, _ = svd(a)
    r = _rank_from_s(s, a.shape, tol)
    return Subspace(a.shape[0], u[:, :r].copy())


def ortho_proj(s: Subspace) -> np.ndarray:
    """Orthogonal projector ``basis @ basis.T``."""
    return s.basis @ s.basis.T


def orthogonal_complement(s: Subspace) -> Subspace:
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    q, _ = np.linalg.qr(s.basis, mode="complete")
    return Subspace(s.ambient_dim, q[:, s.dim:].copy())


def _check_ambient(m: Subspace, n: Subspace):
    if m.ambient_dim != n.ambient_dim:
        raise AmbientMismatch(
            f"ambient dimensions differ: {m.ambient_dim} vs {n.ambient_dim}"
        )


def principal_cosines(m: Subspace, n: Subspace) -> np.ndarray:
    """Cosines of the principal angles between ``m`` and ``n``, nonincreasing."""
    _check_ambient(m, n)
    if m.dim == 0 or n.dim == 0:
        return np.zeros(0)
    return np.clip(singular_values(m.basis.T @ n.basis), 0.0, 1.0)


def friedrichs_cosine(
    m: Subspace, n: Subspace, threshold: float = INTERSECTION_THRESHOLD
) -> float:
    """Cosine of the Friedrichs angle, ``||P_M P_N P_{(M cap N)^perp}||``.

    Principal cosines within ``threshold`` of 1 are attributed to the
    intersection and discarded; the largest remaining cosine is returned,
    or 0 when nothing remains.
    """
    c = principal_cosines(m, n)
    rest = c[c < 1.0 - threshold]
    return float(rest[0]) if rest.size else 0.0


def gap(m: Subspace, n: Subspace) -> float:
    """Gap ``||(I - P_N) P_M||`` between two subspaces."""
    _check_ambient(m, n)
    if m.dim == 0:
        return 0.0
    residual = m.basis - n.basis @ (n.basis.T @ m.basis)
    return min(spectral_norm(residual), 1.0)
