"""Shared exception types."""

from __future__ import annotations


class DomainError(ValueError):
    """A precondition on the mathematical domain was violated."""


class BoundExceededError(DomainError):
    """An exhaustive computation was requested beyond the configured bound."""


class ProviderDomainError(DomainError):
    """A base-count provider was queried outside its validity domain."""


class InternalInvariantError(AssertionError):
    """A structural invariant failed; indicates a bug, not bad input."""
