"""Exception types shared across the package."""


class DynframeError(Exception):
    """Base class for all library errors."""


class NotHermitian(DynframeError):
    pass


class NotNormal(DynframeError):
    pass


class NumericalFailure(DynframeError):
    pass


class ShapeMismatch(DynframeError):
    pass


class DimensionMismatch(ShapeMismatch):
    pass


class ZeroVector(DynframeError):
    pass


class NotAFrame(DynframeError):
    pass


class SingularTransport(DynframeError):
    pass


class IndexMismatch(DynframeError):
    pass


class TemplateMismatch(DynframeError):
    pass


class AllZeroCoefficients(DynframeError):
    pass


class IndexOutOfRange(DynframeError):
    pass


class DegenerateTrace(DynframeError):
    pass


class KTooSmall(DynframeError):
    pass


class CriterionFailed(DynframeError):
    pass


class InputError(DynframeError):
    """Malformed user-supplied data (files, CLI arguments)."""
