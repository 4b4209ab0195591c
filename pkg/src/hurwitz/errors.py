"""Exception types shared across the package."""

from __future__ import annotations


class HurwitzError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HurwitzError, ValueError):
    """Malformed input: bad partition string, empty parts, negative degree..."""


class UnsupportedGenusError(HurwitzError, ValueError):
    """A genus outside what a given route can compute."""


class BudgetExceeded(HurwitzError, RuntimeError):
    """A brute-force search would visit more leaves than its cap allows."""

    def __init__(self, what: str, needed: int, cap: int):
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: search size {needed} exceeds cap {cap}")


class TableFormatError(HurwitzError, ValueError):
    """A memo cache file with a wrong header, version or entry line."""


class ConsistencyError(HurwitzError, AssertionError):
    """An internal identity failed (inexact division, negative count)."""
