"""Custom exception hierarchy for printadopt."""

from __future__ import annotations


class PrintadoptError(Exception):
    """Base exception for all printadopt errors."""

    exit_code = 1


class ConfigError(PrintadoptError):
    """Invalid or missing configuration (instance file, settings, sweep spec)."""


class DomainError(PrintadoptError, ValueError):
    """Argument outside the domain of an operation."""


class UnsupportedModelError(PrintadoptError):
    """Closed form requested for a demand model or product count it does not cover."""


class ComplexityError(PrintadoptError):
    """Exhaustive search requested on a problem too large to enumerate."""


class NumericalError(PrintadoptError):
    """A numerical procedure could not produce a result."""

    exit_code = 2


class BracketError(NumericalError):
    """Root or boundary search without a sign change in its bracket."""

    def __init__(self, what: str, lo: float, hi: float):
        self.lo = lo
        self.hi = hi
        super().__init__(f"No sign change for {what} on [{lo:g}, {hi:g}]")


class OutputError(PrintadoptError):
    """Writing results to disk failed."""

    exit_code = 3

    def __init__(self, path: str, reason: Exception | str):
        self.path = path
        super().__init__(f"Cannot write {path}: {reason}")


class InputError(PrintadoptError):
    """Reading a configuration file failed at the operating-system level."""

    exit_code = 3

    def __init__(self, path: str, reason: Exception | str):
        self.path = path
        super().__init__(f"Cannot read {path}: {reason}")
