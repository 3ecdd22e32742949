class ResourceLimitError(RuntimeError):
    """Requested size exceeds a configured cap; not a mathematical failure."""
