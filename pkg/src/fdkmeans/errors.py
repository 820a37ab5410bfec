"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A parameter (df, k, proportion, method name, mask, grid...) is out of contract."""


class OutOfDomainError(ValueError):
    """An evaluation point lies outside the basis domain."""


class SingularFitError(ValueError):
    """The least-squares design matrix is rank deficient."""


class InsufficientDataError(ValueError):
    """Too few observations for the requested operation."""
