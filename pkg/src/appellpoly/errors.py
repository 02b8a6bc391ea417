"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside its allowed range (e.g. a Bernoulli
    probability outside [0, 1], or a beta shape below 1)."""


class MomentFileError(ValueError):
    """A custom moment document was rejected during validation."""
