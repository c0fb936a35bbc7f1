"""Exception hierarchy.

Search failures that are *expected outcomes* (no witness inside the bounds)
are returned as ``None`` by the search functions.  The classes below are
raised when a construction cannot be completed or an input is malformed.
"""

from __future__ import annotations


class LargenessError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(LargenessError, ValueError):
    """Bad input: a malformed set document, bound or semigroup key."""


class SetSpecError(ConfigError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class DepthCapError(ConfigError):
    pass


class IdxOverflowError(LargenessError, OverflowError):
    """An element index left the representable range."""


class SearchExhausted(LargenessError):
    """A bounded construction ran out of candidates."""


class PoolExhausted(SearchExhausted):
    def __init__(self, message: str, stage: dict):
        super().__init__(message)
        self.stage = stage


class TailExhausted(SearchExhausted):
    def __init__(self, message: str, stage: dict):
        super().__init__(message)
        self.stage = stage


class WitnessExhausted(SearchExhausted):
    def __init__(self, message: str, subject):
        super().__init__(message)
        self.subject = subject


class UniquenessViolation(LargenessError):
    """A built sum subsystem repeats a finite sum (hypotheses of the semigroup not met)."""

    def __init__(self, first: tuple[int, ...], second: tuple[int, ...], value):
        super().__init__(
            f"index sets {list(first)} and {list(second)} share the sum {value!r}"
        )
        self.pair = (first, second)
        self.value = value
