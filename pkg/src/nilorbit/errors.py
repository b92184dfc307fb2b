"""Exception hierarchy shared by all engines."""

from __future__ import annotations


class NilorbitError(Exception):
    """Base class for every error raised by this package."""


class OrbitError(NilorbitError, ValueError):
    """Invalid column data for a classical orbit.

    ``index`` is the column index (in the group's own indexing, so the
    first column of a symplectic orbit is 0 and of an orthogonal orbit
    is 1) at which validation first failed.
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NotDecreasing(OrbitError):
    pass


class ParityPairViolation(OrbitError):
    pass


class SizeMismatch(OrbitError):
    pass


class NotDegenerable(NilorbitError, ValueError):
    pass


class IncompatibleSign(NilorbitError, ValueError):
    pass


class ShapeMismatch(NilorbitError, ValueError):
    pass


class NotEvenGeneric(NilorbitError, ValueError):
    pass


class RankMismatch(NilorbitError, ValueError):
    pass


class UnsupportedFamily(NilorbitError, ValueError):
    pass


class NonIntegralResult(NilorbitError, ArithmeticError):
    pass


class MissingFixture(NilorbitError, LookupError):
    def __init__(self, orbit, epsilon: str):
        cols = ",".join(str(c) for c in orbit.columns)
        super().__init__(f"no unipotent fixture for U({cols};{epsilon}) in {orbit.group}")
        self.orbit = orbit
        self.epsilon = epsilon
