"""Exception types shared across the library."""


class DomainError(ValueError):
    """Input violates a mathematical precondition of an operation."""


class ParseError(DomainError):
    """An input file (quiver, charge, or matrix JSON) is malformed."""
