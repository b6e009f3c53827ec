"""Shared exception types."""


class StructuralError(ValueError):
    """Inputs violate a structural precondition (arity mismatch, non-bijection, bad parameters)."""


class ReducibilityError(ValueError):
    """A hyperbolic satellite slot received the unknot, which would make the underlying link reducible."""


class NotCanonicalError(ValueError):
    """An operation requiring canonical input received a non-canonical tree."""


class ParseError(ValueError):
    """Syntax error with source position."""

    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class DomainError(ValueError):
    """Numeric input outside the domain of a geometric kernel."""


class PoleError(ValueError):
    """Stereographic projection evaluated at (or too close to) the projection pole."""


class SingularityError(ValueError):
    """A denominator in a conformal map vanished."""
