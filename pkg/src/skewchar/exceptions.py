"""Exception hierarchy for skewchar."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from skewchar.models import VerificationReport


class SkewcharError(Exception):
    """Base class of every error raised by the package."""


# ===== Algebra =====


class SignatureMismatch(SkewcharError):
    """Operands belong to rings of different (m|n) signatures."""


class NotDivisible(SkewcharError):
    """Exact division left a nonzero remainder."""


class NotUnitNormalized(SkewcharError):
    """An operator series with constant term other than 1 was inverted."""


class ParseError(SkewcharError):
    """Text or JSON input could not be parsed."""


# ===== Shapes =====


class ShapeError(SkewcharError):
    """A partition, skew diagram or constructor precondition is violated."""


class NotHook(ShapeError):
    """The partition is not an (m|n)-hook partition."""


class NotPrime(ShapeError):
    """The skew diagram is not prime."""


class TooFewColumns(ShapeError):
    """The skew diagram has fewer than two columns."""


class MalformedTuple(ShapeError):
    """A lattice path tuple intersects or has wrong endpoints."""


# ===== Characters =====


class MonomialMismatch(SkewcharError):
    """A monomial produced a different central eigenvalue than the rest."""

    def __init__(self, message: str, monomial: Any = None) -> None:
        super().__init__(message)
        self.monomial = monomial


class NoUniqueLeading(SkewcharError):
    """The weight maximum is attained by several monomials."""


# ===== Bethe / fusion =====


class PoleAtRoot(SkewcharError):
    """A reduced factor of the Bethe equation has a pole at the root."""


class ZeroSpectral(SkewcharError):
    """The R-matrix was requested at spectral parameter 0."""


class IllDefinedProduct(SkewcharError):
    """A fusion product has a pole that does not cancel."""


# ===== Verification =====


class IdentityMismatch(SkewcharError):
    """An identity failed to verify; carries the failing report."""

    def __init__(self, report: VerificationReport) -> None:
        failing = report.first_failure()
        detail = f"{failing.name}: {failing.detail}" if failing else "unknown check"
        super().__init__(f"{report.name} failed at {detail}")
        self.report = report


# ===== Usage =====


class UsageError(SkewcharError):
    """Invalid invocation that the user can fix."""


class ConfigError(UsageError):
    """An environment variable holds a malformed value."""


class SizeCapExceeded(UsageError):
    """The requested computation exceeds a configured size cap."""
