"""Exception types shared across the package."""

from __future__ import annotations

from typing import Optional

__all__ = [
    "FrobtopeError",
    "GroupSpecError",
    "NotFrobeniusError",
    "CapExceededError",
]


class FrobtopeError(Exception):
    """Base class for all frobtope-specific errors."""


class GroupSpecError(FrobtopeError):
    """A group-spec string could not be parsed."""


class NotFrobeniusError(FrobtopeError):
    """A permutation group failed the Frobenius requirements.

    ``witness`` carries a violating element (for example a non-identity
    permutation fixing two or more points) when one exists.
    """

    def __init__(self, message: str, witness: Optional[object] = None):
        super().__init__(message)
        self.witness = witness


class CapExceededError(FrobtopeError):
    """A configured size cap (closure size, subset count, face count) was hit."""
