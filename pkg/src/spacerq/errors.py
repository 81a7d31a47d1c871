"""Exception types shared across the package."""

from __future__ import annotations


class SpacerqError(Exception):
    """Base class for errors raised by this package."""


class CircuitFormatError(SpacerqError, ValueError):
    """A circuit document could not be parsed.

    ``line`` and ``column`` are set when the failure came from the JSON
    layer, so command-line callers can point at the offending spot.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class UnsupportedGateError(SpacerqError, ValueError):
    """A gate is structurally valid but outside the supported gate set."""


class CapacityError(SpacerqError, RuntimeError):
    """A requested register exceeds the dense-simulation qubit cap."""
