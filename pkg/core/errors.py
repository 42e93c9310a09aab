class BicomplexError(Exception):
    """Base class for every error raised by the library."""


class NullConeError(BicomplexError, ArithmeticError):
    """Raised when an operation needs an invertible value but got a zero divisor (or zero)."""


class NullConeBreakdown(BicomplexError, ArithmeticError):
    """Raised when an orthonormalization residual has a self-product in the null cone."""

    def __init__(self, index: int, message: str | None = None) -> None:
        self.index = index
        super().__init__(
            message
            or f"residual {index} has a self-product in the null cone (dependent input in some idempotent component)"
        )


class DimensionMismatch(BicomplexError, ValueError):
    """Raised when kets, sequences or coefficient lists of different lengths meet."""


class InvalidPrefix(BicomplexError, ValueError):
    """Raised when a prefix length exceeds the size of an orthonormal system."""


class ParseError(BicomplexError, ValueError):
    """Raised for malformed expressions or malformed JSON documents."""


class UnknownSuite(BicomplexError, KeyError):
    """Raised when a verification suite name is not registered."""
