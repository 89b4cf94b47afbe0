"""Exception hierarchy shared by every divlab module."""

from __future__ import annotations


class DivlabError(Exception):
    """Base class for all errors raised by divlab."""


class Fault(DivlabError):
    """Internal consistency check failed; always a bug."""


class NotMember(DivlabError):
    """Value is well formed but does not belong to the requested domain."""


class PreconditionFailed(DivlabError):
    pass


class UnitFactor(PreconditionFailed):
    """One of the factors is a unit, so the question reduces to plain divisibility.

    ``other`` names the non-unit side ("b" or "c") that the divisor then divides.
    """

    def __init__(self, message: str, other: str, quotient=None):
        super().__init__(message)
        self.other = other
        self.quotient = quotient


class OracleNeeded(DivlabError):
    """Polynomial too large for the built-in factorizer; supply a factor."""


class Undecided(DivlabError):
    """No registered decision procedure covers the given inputs."""


class EmptyContent(DivlabError):
    pass


class ClaimViolation(Fault):
    """f*g lies in R while neither f nor g does."""


class ParseError(DivlabError):
    def __init__(self, message: str, text: str = "", position: int = 0, expected: tuple[str, ...] = ()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if expected:
            detail += f" (expected one of: {', '.join(expected)})"
        if text:
            detail += f"\n  {text}\n  {' ' * position}^"
        super().__init__(detail)
        self.message = message
