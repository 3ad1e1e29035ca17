"""Exceptions shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied data (bad rank, weight outside alcove, ...)."""


class InternalLimitError(RuntimeError):
    """A configured search or reduction bound was exceeded."""
