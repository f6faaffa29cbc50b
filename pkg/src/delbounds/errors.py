"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An instance exceeds a configured size/time/node cap."""


class ConstructionError(RuntimeError):
    """A code construction produced an invalid codebook (internal bug guard)."""
