"""Exception taxonomy shared by all modules.

The CLI maps these to exit codes: usage-type errors (invalid parameter,
unsupported input, out-of-hypothesis, infeasible parameter) exit 2,
budget violations exit 3.
"""


class CoverDepthError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(CoverDepthError):
    """An argument violates a documented precondition."""


class UnsupportedInputError(CoverDepthError):
    """The input is well-formed but outside the supported graph class."""


class SizeLimitError(CoverDepthError):
    """A hard resource budget would be exceeded; nothing is truncated silently."""


class InfeasibleParameterError(CoverDepthError):
    """The requested object provably does not exist for these parameters."""


class OutOfHypothesisError(CoverDepthError):
    """A closed-form formula was requested outside its proven hypothesis."""
