"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CodecError(DomainError):
    """A 01-word is not the boundary sequence of any partition."""


class PreconditionError(DomainError):
    """An input violates the membership precondition of a map."""
