"""Exact q-characters and identities for skew representations of Y(gl(m|n))."""

from skewchar.core_ring import CharPoly, Monomial
from skewchar.diagrams import Partition, SkewDiagram
from skewchar.exceptions import IdentityMismatch, SkewcharError
from skewchar.models import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "CharPoly",
    "IdentityMismatch",
    "Monomial",
    "Partition",
    "SkewDiagram",
    "SkewcharError",
    "VerificationReport",
    "__version__",
]
