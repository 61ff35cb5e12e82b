"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An input violates a mathematical precondition of an operation."""


class SurfaceMismatchError(DomainError):
    """Two divisor classes living on different Hirzebruch surfaces were combined."""


class InvalidSequenceError(DomainError):
    """A list of integers is not the multiplicity sequence of a cusp."""
