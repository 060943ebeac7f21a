"""
Error types shared by every module. All of them are ValueErrors so callers that only
care about "bad input" can catch the builtin.
"""

from typing import Optional


class ChiError(ValueError):
    """Base class for all domain errors raised by this package."""


class GraphConstructionError(ChiError):
    pass


class Graph6ParseError(ChiError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InputParseError(ChiError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FamilyDomainError(ChiError):
    pass


class PreconditionError(ChiError):
    pass


class ClaimRangeError(ChiError):
    """Raised when a parameter lies outside the range in which a statement is claimed."""


class CeilingExceededError(ChiError):
    def __init__(self, what: str, n: int, ceiling: int):
        super().__init__(f"{what}: n={n} exceeds the enumeration ceiling {ceiling}")
        self.n = n
        self.ceiling = ceiling


class RootFindingError(ChiError):
    def __init__(self, message: str, bracket: Optional[tuple] = None):
        super().__init__(message)
        self.bracket = bracket
