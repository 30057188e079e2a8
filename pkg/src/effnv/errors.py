class EffnvError(Exception):
    """Base class for errors raised by this package."""


class InputError(EffnvError, ValueError):
    """Malformed user input: bad file syntax, unknown curve, invalid argument.

    ``line`` is the 1-based line number when the error comes from a file.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NotNegativeDefiniteError(EffnvError, ValueError):
    def __init__(self, message: str, minor_index: int | None = None, minor_value=None):
        self.minor_index = minor_index
        self.minor_value = minor_value
        super().__init__(message)


class HypothesisViolation(EffnvError, ValueError):
    """Input outside the hypotheses a formula is valid under."""


class InternalInconsistency(EffnvError, RuntimeError):
    """A result that the mathematics says cannot happen (e.g. non-integral chi)."""
