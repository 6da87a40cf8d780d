"""Exception types shared across the package."""


class CircpwError(Exception):
    """Base class for all errors raised by circpw."""


class ParseError(CircpwError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(CircpwError, ValueError):
    """An input does not satisfy the documented precondition."""


class BudgetError(CircpwError):
    """An exact solver refused an instance above its size or time ceiling."""


class ProofAssertionError(CircpwError, AssertionError):
    """An inequality the constructions rely on failed at runtime.

    Carries a ``trace`` dict with whatever diagnostics were available.
    """

    def __init__(self, message, trace=None):
        self.trace = dict(trace or {})
        super().__init__(message)


class VerificationError(CircpwError):
    """A produced certificate failed independent validation."""
