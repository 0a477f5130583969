"""Shared error types."""


class CapExceeded(Exception):
    """A configured resource cap would be exceeded.

    Raised before (or instead of) producing an answer; a partial search never
    returns a result.
    """

    def __init__(self, what: str, estimate: int, cap: int):
        super().__init__(f"{what}: estimated {estimate} exceeds cap {cap}")
        self.what = what
        self.estimate = estimate
        self.cap = cap


class FormatError(ValueError):
    """A text input could not be parsed; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
