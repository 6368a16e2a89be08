"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument lies outside the domain an operation is defined on."""


class DegenerateRecurrence(ArithmeticError):
    """A recurrence coefficient that must stay nonzero vanished."""


class CoeffMismatch(ValueError):
    """Coefficient table was built for a different degree or weight."""


class SingularCoefficient(ArithmeticError):
    """Leading coefficient of a recurrence vanished at some index."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or "leading coefficient vanished at index %d" % index)


class UnsupportedParams(ValueError):
    """Weight parameters outside what this operation supports."""


class UndefinedAcc(ValueError):
    """Digit accuracy is undefined when the reference value is zero."""
