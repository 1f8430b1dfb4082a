"""Exception types shared across the package."""


class SwapAlgError(Exception):
    """Base class for all package errors."""


class ConfigMismatchError(SwapAlgError):
    """Operands built over different point configurations were mixed."""


class InvalidCutError(SwapAlgError):
    """A cut point coincides with one of the argument points."""


class DegenerateFractionError(SwapAlgError):
    """A fraction was requested whose denominator would contain a zero pair."""


class NotLoxodromicError(SwapAlgError):
    """A matrix without distinct-modulus real eigenvalues was supplied."""


class EvaluationError(SwapAlgError):
    """A fraction cannot be evaluated (scale-dependent or degenerate)."""


class WordError(SwapAlgError):
    """A group word could not be parsed or resolved."""


class ParseError(SwapAlgError):
    """Expression syntax error, with position information."""

    def __init__(self, message, line=1, column=0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
