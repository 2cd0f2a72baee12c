"""Exception hierarchy shared by every module in the package."""


class FrameError(Exception):
    """Base class for all errors raised by ``wovenframes``."""


class InvalidMatrix(FrameError, ValueError):
    """Matrix is not two-dimensional or has non-finite entries."""


class ShapeMismatch(FrameError, ValueError):
    """Operands have incompatible shapes."""


class AmbientMismatch(ShapeMismatch):
    """Two subspaces live in ambient spaces of different dimension."""


class NotAFrame(FrameError, ValueError):
    """The synthesis operator of a vector family is not surjective."""


class InvalidScale(FrameError, ValueError):
    """A scale factor was not strictly positive."""


class InvalidConstant(FrameError, ValueError):
    """A woven lower constant supplied by the caller was not positive."""


class SingularOperator(FrameError, ValueError):
    """An operator required to be invertible is numerically singular."""


class TooManyPartitions(FrameError, ValueError):
    """Exhaustive enumeration over ``2**n`` subsets exceeds the cap."""
