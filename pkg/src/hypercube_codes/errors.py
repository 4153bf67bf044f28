"""Shared exception types.

Plain ValueError is used for malformed inputs (bad lengths, bad ranges,
bad file contents).  The classes below mark the two other failure modes
that callers may want to handle separately.
"""


class OutOfRegimeError(Exception):
    """Parameters are valid but outside the range where exact computation
    is supported (search space or budget exceeded)."""


class ConstructionError(Exception):
    """A randomized construction missed its quality target within the
    allowed retry budget."""
