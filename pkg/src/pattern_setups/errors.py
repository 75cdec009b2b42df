"""Exception types raised across the package."""

from __future__ import annotations


class PatternSetupError(Exception):
    """Base class for every error raised by this package."""


class CycleDetected(PatternSetupError):
    """The closure of an input relation is not antisymmetric."""


class UnknownElement(PatternSetupError, KeyError):
    """A referenced element or object id is not declared."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class SpaceMismatch(PatternSetupError, ValueError):
    """A description does not belong to the space it was used with."""


class InfiniteIdeal(PatternSetupError):
    """A principal ideal (or another derived set) is infinite."""


class UnsupportedCapability(PatternSetupError):
    """The description space lacks a capability required by the call."""


class UndefinedForSpace(PatternSetupError):
    """The requested quantity is not decidable for the space."""


class CapExceeded(PatternSetupError):
    """An enumeration would exceed its configured cap."""


class NotAStructure(PatternSetupError):
    """The setup is not a pattern structure but one was required."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownFixture(PatternSetupError, KeyError):
    """No fixture is registered under the requested name."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class ParseError(PatternSetupError, ValueError):
    """Input data could not be parsed or failed validation."""
