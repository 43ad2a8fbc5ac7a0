"""
Error Types
===========
Exception hierarchy shared by the algebra, families, verification and CLI layers.
"""

from typing import Optional


class FubiniError(Exception):
    """Base class for every error raised by this package"""

    error_type = "FubiniError"

    def to_dict(self) -> dict:
        return {"type": self.error_type, "message": str(self)}


class InvalidOperandError(FubiniError, ZeroDivisionError):
    """Division by zero in Q or Q(sqrt 2)"""

    error_type = "InvalidOperandError"


class ParseError(FubiniError, ValueError):
    """Malformed textual value (rational, sqrt2 number, half-integer, polynomial)"""

    error_type = "ParseError"


class InsufficientArgumentsError(FubiniError, ValueError):
    error_type = "InsufficientArgumentsError"


class SeriesOrderError(FubiniError):
    """Order mismatch between series, or a coefficient index beyond the truncation order"""

    error_type = "SeriesOrderError"


class NonInvertibleError(FubiniError):
    """Constant term of a series is not an invertible constant"""

    error_type = "NonInvertibleError"

    def __init__(self, message: str, coefficient: Optional[str] = None):
        super().__init__(message)
        self.coefficient = coefficient


class NonZeroLeadingError(FubiniError):
    """A coefficient that must vanish before dividing by a power of t does not"""

    error_type = "NonZeroLeadingError"

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class FamilyDomainError(FubiniError, ValueError):
    """Order, gamma or lambda outside the domain of a family constructor"""

    error_type = "FamilyDomainError"


class SuiteConfigError(FubiniError, ValueError):
    error_type = "SuiteConfigError"


class CliUsageError(FubiniError):
    error_type = "CliUsageError"
