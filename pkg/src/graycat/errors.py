"""Error taxonomy shared by all graycat modules.

Structural problems (dangling ids, non-total maps, malformed input) are kept
apart from axiomatic failures, which are collected as report violations and
never raised.
"""


class GraycatError(Exception):
    """Base class for all graycat errors."""


class StructuralError(GraycatError):
    """A value is malformed: dangling cell id, missing map entry, bad shape."""


class CoherenceError(GraycatError):
    """An operation was applied to boundary-incompatible arguments."""


class ClosureError(GraycatError):
    """A boundary-compatible argument tuple has no table entry."""


class SizeBoundError(GraycatError):
    """A brute-force enumeration would exceed the configured search bound."""


class ParseError(GraycatError):
    """Text input could not be parsed; carries line information."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
