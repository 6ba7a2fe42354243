"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point lies outside the open unit disk / unit ball."""


class ParameterError(ValueError):
    """A numeric parameter is outside its admissible range."""
