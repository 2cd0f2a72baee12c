"""
Weavings of a frame pair and the exhaustive woven oracle.

For frames ``f`` and ``g`` with ``n`` vectors each, a subset ``sigma`` of
``{0, ..., n-1}`` (a bitmask, bit ``i`` set when ``i`` is in ``sigma``)
selects the weaving that takes ``g_i`` for ``i`` in ``sigma`` and ``f_i``
otherwise. Its synthesis matrix is ``T_f + (T_g - T_f) P_sigma``.

:func:`woven_constants` evaluates all ``2**n`` weavings. Subsets are
processed in fixed-size blocks of consecutive bitmasks, and blocks can be
spread over a thread pool; since the per-block work never depends on the
worker count and the reduction is a min/max, the result is bit-identical
for any number of workers.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch, TooManyPartitions
from .frames import Frame
from .linalg import DEFAULT_TOL, RankTolerance, gamma, rank, spectral_norm

__all__ = [
    "DEFAULT_CAP",
    "PartitionSet",
    "WeavingReport",
    "projection_matrix",
    "weaving_synthesis",
    "weaving_bounds",
    "woven_constants",
    "iter_subsets",
    "check_cap",
]

DEFAULT_CAP = 20
#: Above this many vectors the per-subset table is dropped unless requested.
PER_SIGMA_DEFAULT_LIMIT = 16
_BLOCK = 1 << 12


@dataclass(frozen=True)
class PartitionSet:
    """The subset ``sigma`` of ``{0, ..., n-1}``, its complement implied."""

    n: int
    sigma: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.sigma < 0 or self.sigma >> self.n:
            raise ValueError(f"bitmask {self.sigma:#b} has bits beyond n={self.n}")

    @classmethod
    def from_indices(cls, n: int, indices) -> "PartitionSet":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range for n={n}")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "PartitionSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "PartitionSet":
        return cls(n, (1 << n) - 1)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.sigma >> i & 1)

    @property
    def mask_array(self) -> np.ndarray:
        return (self.sigma >> np.arange(self.n)) & 1 == 1

    def complement(self) -> "PartitionSet":
        return PartitionSet(self.n, ~self.sigma & ((1 << self.n) - 1))

    def bits(self) -> str:
        """Binary string with bit 0 rightmost, e.g. ``'01'`` for ``{0}`` when n=2."""
        return format(self.sigma, f"0{max(self.n, 1)}b")


def iter_subsets(n: int):
    for mask in range(1 << n):
        yield PartitionSet(n, mask)


def check_cap(n: int, cap: int):
    if n > cap:
        raise TooManyPartitions(f"2**{n} subsets exceeds the enumeration cap n <= {cap}")


def projection_matrix(p: PartitionSet) -> np.ndarray:
    return np.diag(p.mask_array.astype(np.float64))


def _check_pair(f: Frame, g: Frame, n: int | None = None):
    if f.matrix.shape != g.matrix.shape:
        raise ShapeMismatch(f"frames have shapes {f.matrix.shape} and {g.matrix.shape}")
    if n is not None and n != f.n:
        raise ShapeMismatch(f"partition of {n} indices used with frames of {f.n} vectors")


def weaving_synthesis(f: Frame, g: Frame, p: PartitionSet) -> np.ndarray:
    _check_pair(f, g, p.n)
    return np.where(p.mask_array[None, :], g.matrix, f.matrix)


def weaving_bounds(
    f: Frame, g: Frame, p: PartitionSet, tol: RankTolerance = DEFAULT_TOL
) -> tuple[float, float, bool]:
    """``(lower, upper, is_frame)`` for the weaving selected by ``p``.

    ``lower`` is exactly 0 when the weaving does not span.
    """
    w = weaving_synthesis(f, g, p)
    ok = rank(w, tol) == f.dim
    lower = gamma(w, tol) ** 2 if ok else 0.0
    return lower, spectral_norm(w) ** 2, ok


@dataclass(frozen=True, eq=False)
class WeavingReport:
    """Frame bounds of every weaving of a pair and their uniform extremes.

    ``lower_sigma``, ``upper_sigma`` and ``frame_sigma`` are indexed by
    bitmask and may be ``None`` when the table was not stored.
    ``worst_sigma`` is the smallest bitmask attaining ``uniform_lower``.
    """

    n: int
    uniform_lower: float
    uniform_upper: float
    woven: bool
    worst_sigma: int
    lower_sigma: np.ndarray | None = None
    upper_sigma: np.ndarray | None = None
    frame_sigma: np.ndarray | None = None

    def per_sigma(self, mask: int) -> tuple[float, float, bool]:
        if self.lower_sigma is None:
            raise LookupError("per-sigma table was not stored")
        return (float(self.lower_sigma[mask]), float(self.upper_sigma[mask]),
                bool(self.frame_sigma[mask]))


def _block_bounds(tf, tg, d, lo, hi, tol):
    masks = np.arange(lo, hi, dtype=np.int64)
    n = tf.shape[1]
    sel = ((masks[:, None] >> np.arange(n)) & 1) == 1
    w = np.where(sel[:, None, :], tg[None, :, :], tf[None, :, :])
    s = np.linalg.svd(w, compute_uv=False)
    smax = s[:, 0]
    cut = np.maximum(tol.absolute, tol.relative * smax * max(d, n))
    ranks = np.count_nonzero(s > cut[:, None], axis=1)
    ok = ranks == d
    lower = np.where(ok, s[:, min(d, s.shape[1]) - 1] ** 2, 0.0)
    return lower, smax**2, ok


def woven_constants(
    f: Frame,
    g: Frame,
    tol: RankTolerance = DEFAULT_TOL,
    *,
    cap: int = DEFAULT_CAP,
    store_per_sigma: bool | None = None,
    workers: int = 1,
) -> WeavingReport:
    """Evaluate every weaving of ``(f, g)`` and reduce to uniform constants.

    Parameters
    ----------
    f, g : Frame
        Families of the same shape ``d x n``.
    cap : int
        Largest ``n`` accepted; raises :class:`TooManyPartitions` above it.
    store_per_sigma : bool, optional
        Keep the full ``2**n`` table. Defaults to ``n <= 16``.
    workers : int
        Threads used to evaluate blocks of subsets.
    """
    _check_pair(f, g)
    n, d = f.n, f.dim
    if n == 0:
        raise ShapeMismatch("frames must contain at least one vector")
    check_cap(n, cap)
    if store_per_sigma is None:
        store_per_sigma = n <= PER_SIGMA_DEFAULT_LIMIT
    tf, tg = f.matrix, g.matrix
    total = 1 << n
    ranges = [(lo, min(lo + _BLOCK, total)) for lo in range(0, total, _BLOCK)]

    def run(r):
        lower, upper, ok = _block_bounds(tf, tg, d, r[0], r[1], tol)
        i = int(np.argmin(lower))
        summary = (float(lower[i]), r[0] + i, float(upper.max()), bool(ok.all()))
        return summary, ((lower, upper, ok) if store_per_sigma else None)

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, ranges))
    else:
        results = [run(r) for r in ranges]

    # blocks are in increasing mask order, so strict < keeps the smallest argmin
    c, worst, dmax, woven = np.inf, 0, 0.0, True
    for (lo_val, lo_mask, up_val, all_ok), _ in results:
        if lo_val < c:
            c, worst = lo_val, lo_mask
        dmax = max(dmax, up_val)
        woven = woven and all_ok

    tables = {}
    if store_per_sigma:
        tables = dict(
            lower_sigma=np.concatenate([t[0] for _, t in results]),
            upper_sigma=np.concatenate([t[1] for _, t in results]),
            frame_sigma=np.concatenate([t[2] for _, t in results]),
        )
        for a in tables.values():
            a.setflags(write=False)
    return WeavingReport(n=n, uniform_lower=c, uniform_upper=dmax, woven=woven,
                         worst_sigma=worst, **tables)
