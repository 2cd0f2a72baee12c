"""Woven pairs of finite frames: bounds, exhaustive weaving checks, perturbation certificates."""

__version__ = "0.1.0"

from .errors import (
    AmbientMismatch,
    FrameError,
    InvalidConstant,
    InvalidMatrix,
    InvalidScale,
    NotAFrame,
    ShapeMismatch,
    SingularOperator,
    TooManyPartitions,
)
from .linalg import (
    DEFAULT_TOL,
    RankTolerance,
    Subspace,
    friedrichs_cosine,
    gamma,
    gap,
    null_basis,
    ortho_proj,
    pinv,
    range_basis,
    spectral_norm,
    svd,
)
from .frames import (
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
from .weaving import (
    PartitionSet,
    WeavingReport,
    projection_matrix,
    weaving_bounds,
    weaving_synthesis,
    woven_constants,
)
from .certificates import (
    AlphaInterval,
    Certificate,
    TheoremId,
    alpha_interval,
    check_dual_perturbation,
    check_operator_perturbation,
    check_pair_operator_perturbation,
    check_perturbation,
    check_scaled_dual,
    check_scaled_dual_llhl,
    cross_check,
    ratio_threshold_r0,
    scaled_alpha_llhl,
)
from .angles import (
    gamma_product_bounds,
    oblique_q,
    riesz_compatibility,
    stacked_synthesis,
    woven_angle_sup,
)
