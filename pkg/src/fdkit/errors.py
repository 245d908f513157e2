"""Exception types raised by fdkit."""


class FdkitError(Exception):
    """Base class for all fdkit errors."""


class ArgumentError(FdkitError, ValueError):
    """An argument is outside the domain an operation accepts."""


class DuplicateGridPoint(ArgumentError):
    """Two grid points coincide.

    ``pair`` holds the (0-based) indices of the offending points.
    """

    def __init__(self, i, j, value):
        self.pair = (i, j)
        self.value = value
        super().__init__(f"grid points {i} and {j} coincide (value {value!r})")


class ZeroRootError(ArgumentError):
    """A root is zero where reciprocals of the roots are required."""


class DegenerateConstant(FdkitError):
    """The error constant cancels at the detected order of accuracy.

    Raised when the boost test and the computed error constant disagree,
    which means the tolerance is mistuned for the grid. Both candidate
    orders and their constants are attached so the caller can decide.
    """

    def __init__(self, message, candidates):
        self.candidates = candidates
        super().__init__(message)
