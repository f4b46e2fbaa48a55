"""Shared exception types."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """Raised when a request would exceed an exponential-cost safety cap."""


class EdgeListParseError(ValueError):
    """Raised on malformed edge-list input.

    Carries the 1-based ``line`` number of the offending line when it is
    known, so callers can point at the exact spot in the file.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
