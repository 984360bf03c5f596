"""Exceptions shared across the package."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size cap."""


class PrecisionError(ArithmeticError):
    """Certified integer rounding failed at the maximum working precision."""
