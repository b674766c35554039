"""Shared exception types."""


class ParameterError(ValueError):
    """A knot parameter violates a documented bound."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
