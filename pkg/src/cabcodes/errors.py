"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a documented precondition."""


class CapExceededError(RuntimeError):
    """A search or enumeration would exceed its configured cap."""
