"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: InputError -> 2,
PreconditionError -> 3, CapacityError -> 4.
"""

import os


class MatconnError(Exception):
    """Base class for all package errors."""


class InputError(MatconnError):
    """Malformed input: unknown ids, bad file contents, invalid partitions."""


class PreconditionError(MatconnError):
    """A documented precondition of an operation is violated."""


class CapacityError(MatconnError):
    """Input exceeds the exhaustive-search capacity bound."""


class EmbeddingError(InputError):
    """A supplied face structure is not a valid combinatorial embedding."""


class InternalConsistencyError(MatconnError):
    """A stabilization check failed on input that should be well-formed."""


def capacity_limit(default: int) -> int:
    """Exhaustive-search bound, overridable via MATCONN_MAX_GROUND."""
    raw = os.environ.get("MATCONN_MAX_GROUND", "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise InputError(f"MATCONN_MAX_GROUND must be an integer, got {raw!r}") from None
    return default
