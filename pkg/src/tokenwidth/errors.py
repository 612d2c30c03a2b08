"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An operation received arguments outside its documented domain."""


class ResourceLimitError(RuntimeError):
    """An instance exceeds a configured size cap and was refused."""
