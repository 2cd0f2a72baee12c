"""
Sufficient-condition certificates for woven pairs.

Each ``check_*`` function evaluates one perturbation criterion and returns
a :class:`Certificate`. A certificate that holds guarantees the pair in
``Certificate.pair`` is woven; one that does not hold says nothing (the
criteria are sufficient, never necessary). :func:`cross_check` runs the
exhaustive oracle from :mod:`wovenframes.weaving` on the certified pair.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from .errors import InvalidConstant, InvalidScale, NotAFrame, ShapeMismatch, SingularOperator
from .frames import (
    Frame,
    FrameBounds,
    apply_operator,
    canonical_dual,
    frame_operator,
    is_frame,
    optimal_bounds,
    scale,
)
from .linalg import DEFAULT_TOL, RankTolerance, as_mat, rank, spectral_norm
from .weaving import DEFAULT_CAP, WeavingReport, woven_constants

__all__ = [
    "TheoremId",
    "Certificate",
    "AlphaInterval",
    "check_perturbation",
    "check_operator_perturbation",
    "check_pair_operator_perturbation",
    "check_dual_perturbation",
    "scaled_alpha_llhl",
    "check_scaled_dual_llhl",
    "alpha_interval",
    "check_scaled_dual",
    "ratio_threshold_r0",
    "ratio_threshold_r0_closed_form",
    "cross_check",
]


class TheoremId(enum.Enum):
    Epa = "epa"
    OperatorPerturbation = "invertible"
    PairOperatorPerturbation = "pair"
    DualPerturbation = "dual"
    ScaledDualLLHL = "llhl"
    ScaledDualInterval = "scaled"


@dataclass(frozen=True, eq=False)
class Certificate:
    """Verdict of one sufficient condition.

    ``pair`` is the frame pair the criterion certifies as woven when
    ``holds`` is true. ``predicted_lower``/``predicted_upper`` are the
    weaving bounds the criterion guarantees, when it provides any.
    """

    theorem_id: TheoremId
    holds: bool
    measured: dict[str, float] = field(default_factory=dict)
    predicted_lower: float | None = None
    predicted_upper: float | None = None
    pair: tuple[Frame, Frame] | None = None

    def __post_init__(self):
        for k, v in self.measured.items():
            if not math.isfinite(v):
                raise ValueError(f"measured value {k!r} is not finite")


@dataclass(frozen=True)
class AlphaInterval:
    """Open interval ``(lo, hi)`` of admissible scales for the canonical dual."""

    lo: float
    hi: float

    @property
    def nonempty(self) -> bool:
        return self.lo < self.hi

    def contains(self, alpha: float) -> bool:
        return self.lo < alpha < self.hi


def _require_frame(f: Frame, tol: RankTolerance, role: str = "f"):
    if not is_frame(f, tol):
        raise NotAFrame(f"{role} = {f!r} is not a frame for R^{f.dim}")


def _check_shapes(f: Frame, g: Frame):
    if f.matrix.shape != g.matrix.shape:
        raise ShapeMismatch(f"frames have shapes {f.matrix.shape} and {g.matrix.shape}")


def _square_operator(t, d: int, what: str) -> np.ndarray:
    t = as_mat(t)
    if t.shape != (d, d):
        raise ShapeMismatch(f"{what} has shape {t.shape}, expected ({d}, {d})")
    return t


def _perturbation_certificate(theorem_id, f, g, delta, bounds_f, measured):
    a, b_f = bounds_f.lower, bounds_f.upper
    b_g = spectral_norm(g.matrix) ** 2
    root_a = math.sqrt(a)
    holds = delta * delta < a
    measured = dict(measured)
    measured.update(perturbation_norm=delta, lower_bound_A=a, upper_bound_B_F=b_f,
                    upper_bound_B_G=b_g, margin=a - delta * delta)
    if delta != root_a:
        # the inverse-square form (A^{1/2} - delta)^{-2}; kept for comparison only
        measured["inverse_square_bound"] = (root_a - delta) ** -2
    return Certificate(
        theorem_id=theorem_id,
        holds=holds,
        measured=measured,
        predicted_lower=(root_a - delta) ** 2 if holds else None,
        predicted_upper=b_f + b_g if holds else None,
        pair=(f, g),
    )


def check_perturbation(f: Frame, g: Frame, tol: RankTolerance = DEFAULT_TOL) -> Certificate:
    """Woven if ``||T_f - T_g||**2 < A_f``.

    When it holds every weaving has bounds ``(A_f**0.5 - ||T_f - T_g||)**2``
    and ``B_f + B_g``. ``g`` only needs to be a Bessel sequence, which any
    finite family is.
    """
    _check_shapes(f, g)
    _require_frame(f, tol)
    delta = spectral_norm(f.matrix - g.matrix)
    return _perturbation_certificate(
        TheoremId.Epa, f, g, delta, optimal_bounds(f, tol), {}
    )


def check_operator_perturbation(f: Frame, t, tol: RankTolerance = DEFAULT_TOL) -> Certificate:
    """Woven pair ``(f, t(f))`` if ``||(I - t) T_f|| < A_f**0.5``."""
    _require_frame(f, tol)
    t = _square_operator(t, f.dim, "t")
    delta = spectral_norm((np.eye(f.dim) - t) @ f.matrix)
    return _perturbation_certificate(
        TheoremId.OperatorPerturbation, f, apply_operator(t, f), delta,
        optimal_bounds(f, tol), {"identity_distance": spectral_norm(np.eye(f.dim) - t)},
    )


def _invertible(t, d, what, tol):
    t = _square_operator(t, d, what)
    if rank(t, tol) < d:
        raise SingularOperator(f"{what} is numerically singular")
    return t


def check_pair_operator_perturbation(
    f: Frame, g: Frame, u, v, c: float, tol: RankTolerance = DEFAULT_TOL
) -> Certificate:
    """Woven pair ``(u(f), v(g))`` from a woven pair ``(f, g)`` with lower constant ``c``.

    Holds if ``||u^-1 v - I||**2 < c / B_g`` or ``||v^-1 u - I||**2 < c / B_f``.
    ``c`` must be a valid uniform lower bound for the weavings of ``(f, g)``;
    it is not recomputed here.
    """
    _check_shapes(f, g)
    _require_frame(f, tol)
    _require_frame(g, tol, "g")
    if not c > 0:
        raise InvalidConstant(f"woven lower constant must be positive, got {c}")
    d = f.dim
    u = _invertible(u, d, "u", tol)
    v = _invertible(v, d, "v", tol)
    eye = np.eye(d)
    lhs_uv = spectral_norm(np.linalg.solve(u, v) - eye) ** 2
    lhs_vu = spectral_norm(np.linalg.solve(v, u) - eye) ** 2
    b_f = optimal_bounds(f, tol).upper
    b_g = optimal_bounds(g, tol).upper
    holds = lhs_uv < c / b_g or lhs_vu < c / b_f
    return Certificate(
        theorem_id=TheoremId.PairOperatorPerturbation,
        holds=holds,
        measured=dict(lhs_uv=lhs_uv, rhs_uv=c / b_g, lhs_vu=lhs_vu, rhs_vu=c / b_f,
                      woven_lower_C=c, upper_bound_B_F=b_f, upper_bound_B_G=b_g),
        pair=(apply_operator(u, f), apply_operator(v, g)),
    )


def check_dual_perturbation(
    f: Frame, g: Frame, c: float, tol: RankTolerance = DEFAULT_TOL
) -> Certificate:
    """Canonical duals of a woven pair ``(f, g)`` with lower constant ``c`` are woven if

    ``||S_f^-1 - S_g^-1||**2 < c * max(1/(B_g B_f**2), 1/(B_f B_g**2))``.
    """
    _check_shapes(f, g)
    _require_frame(f, tol)
    _require_frame(g, tol, "g")
    if not c > 0:
        raise InvalidConstant(f"woven lower constant must be positive, got {c}")
    b_f = optimal_bounds(f, tol).upper
    b_g = optimal_bounds(g, tol).upper
    s_f_inv = np.linalg.inv(frame_operator(f))
    s_g_inv = np.linalg.inv(frame_operator(g))
    lhs = spectral_norm(s_f_inv - s_g_inv) ** 2
    rhs = c * max(1 / (b_g * b_f**2), 1 / (b_f * b_g**2))
    return Certificate(
        theorem_id=TheoremId.DualPerturbation,
        holds=lhs < rhs,
        measured=dict(lhs=lhs, rhs=rhs, woven_lower_C=c, upper_bound_B_F=b_f,
                      upper_bound_B_G=b_g),
        pair=(canonical_dual(f, tol), canonical_dual(g, tol)),
    )


def scaled_alpha_llhl(bounds: FrameBounds) -> float:
    """Harmonic-mean scale ``2AB / (A + B)``."""
    a, b = bounds.lower, bounds.upper
    return 2 * a * b / (a + b)


def check_scaled_dual_llhl(f: Frame, tol: RankTolerance = DEFAULT_TOL) -> Certificate:
    """``f`` and its canonical dual scaled by ``2AB/(A+B)`` are woven if ``B/A < 2``."""
    bounds = optimal_bounds(f, tol)
    alpha = scaled_alpha_llhl(bounds)
    return Certificate(
        theorem_id=TheoremId.ScaledDualLLHL,
        holds=bounds.ratio < 2,
        measured=dict(ratio=bounds.ratio, alpha=alpha, lower_bound_A=bounds.lower,
                      upper_bound_B_F=bounds.upper),
        pair=(f, scale(canonical_dual(f, tol), alpha)),
    )


def alpha_interval(bounds: FrameBounds) -> AlphaInterval:
    """Scales ``alpha`` with ``B - sqrt(AB) < alpha < 2A``; nonempty iff ``B/A < 4``."""
    a, b = bounds.lower, bounds.upper
    return AlphaInterval(b - math.sqrt(a * b), 2 * a)


def check_scaled_dual(f: Frame, alpha: float, tol: RankTolerance = DEFAULT_TOL) -> Certificate:
    """Woven pair ``(f, alpha * dual(f))`` for ``alpha`` inside :func:`alpha_interval`.

    Both the interval test and the underlying perturbation test
    ``max((B-alpha)**2/B, (A-alpha)**2/A) < A`` must pass; they are
    equivalent in exact arithmetic. ``measured['formula_discrepancy']`` is
    the gap between the endpoint formula and the directly computed
    ``||T_f - alpha S^-1 T_f||**2``.
    """
    if not alpha > 0:
        raise InvalidScale(f"alpha must be positive, got {alpha}")
    bounds = optimal_bounds(f, tol)
    a, b = bounds.lower, bounds.upper
    dual = canonical_dual(f, tol)
    formula = max((b - alpha) ** 2 / b, (a - alpha) ** 2 / a)
    direct = spectral_norm(f.matrix - alpha * dual.matrix) ** 2
    interval = alpha_interval(bounds)
    inside = interval.contains(alpha)
    holds = inside and formula < a
    delta = math.sqrt(formula)
    return Certificate(
        theorem_id=TheoremId.ScaledDualInterval,
        holds=holds,
        measured=dict(
            alpha=alpha, lower_bound_A=a, upper_bound_B_F=b, ratio=bounds.ratio,
            interval_lo=interval.lo, interval_hi=interval.hi,
            perturbation_sq=formula, perturbation_sq_direct=direct,
            formula_discrepancy=abs(formula - direct),
        ),
        predicted_lower=(math.sqrt(a) - delta) ** 2 if holds else None,
        predicted_upper=b + alpha**2 / a if holds else None,
        pair=(f, scale(dual, alpha)),
    )


def _r0_poly(r: float) -> float:
    return r**3 - 3 * r**2 - r - 1


def ratio_threshold_r0() -> float:
    """Real root of ``r**3 - 3r**2 - r - 1`` (about 3.383), by bisection on [3, 4].

    Below this bound ratio ``B/A`` the harmonic-mean scale lies inside
    :func:`alpha_interval`.
    """
    return bisect(_r0_poly, 3.0, 4.0, xtol=1e-12, rtol=4 * np.finfo(float).eps, maxiter=200)


def ratio_threshold_r0_closed_form() -> float:
    """Cardano-type closed form of the same root."""
    q = math.sqrt(11 / 3)
    return (np.cbrt((3 + q) / 6) + np.cbrt((3 - q) / 6)) ** 3


def cross_check(
    cert: Certificate,
    tol: RankTolerance = DEFAULT_TOL,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> tuple[WeavingReport, bool]:
    """Run the exhaustive oracle on ``cert.pair``.

    Returns the oracle report and whether the certificate is consistent with
    it. Only ``holds`` with a non-woven oracle verdict is inconsistent; a
    failed certificate never contradicts anything.
    """
    if cert.pair is None:
        raise ValueError("certificate carries no pair to check")
    report = woven_constants(*cert.pair, tol, cap=cap, workers=workers)
    return report, (not cert.holds) or report.woven
