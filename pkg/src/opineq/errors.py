"""Exception types shared across the workbench."""


class OpineqError(Exception):
    """Base class for all workbench errors."""


class DimensionMismatch(OpineqError):
    """Operands have incompatible shapes."""


class NotHermitian(OpineqError):
    """Matrix fails the Hermitian precondition."""


class NotPSD(OpineqError):
    """Matrix has an eigenvalue below the positive-semidefinite clamp."""


class NoConvergence(OpineqError):
    """An iterative solver exhausted its iteration budget."""


class NotInvertible(OpineqError):
    """Matrix is singular where an inverse is required."""


class BadDimension(OpineqError):
    """Requested matrix dimension is out of the supported range."""


class BadRange(OpineqError):
    """A numeric range argument is empty or out of bounds."""


class Overflow(OpineqError):
    """Normalized iteration produced a non-finite value (signals a defect)."""


class HypothesisViolated(OpineqError):
    """An instance fails the hypothesis validator of an inequality.

    Carries the failing certificate name and its residual.
    """

    def __init__(self, certificate, residual, bound):
        self.certificate = certificate
        self.residual = residual
        self.bound = bound
        super().__init__(
            f"hypothesis certificate {certificate!r} failed: "
            f"residual {residual:.3e} exceeds {bound:.3e}"
        )


class ParamOutOfRange(OpineqError):
    """A parameter value lies outside the declared range of a spec."""


class UnknownSpec(OpineqError):
    """No registry entry with the requested id."""


class VersionMismatch(OpineqError):
    """A fingerprint or report was produced by an incompatible format version."""


class ConfigInvalid(OpineqError):
    """Campaign configuration fails validation."""
