"""Exception hierarchy.

Every error raised by the library derives from :class:`GHSimplexError`.
Input problems additionally derive from :class:`InputError` so callers
(the CLI in particular) can map them to a single exit status.
"""

from __future__ import annotations


class GHSimplexError(Exception):
    """Base class for all library errors."""


class InputError(GHSimplexError, ValueError):
    """Malformed or out-of-range input."""


class NonSquare(InputError):
    pass


class NonFiniteEntry(InputError):
    def __init__(self, i: int, j: int):
        super().__init__(f"entry ({i}, {j}) is not a finite real")
        self.i, self.j = i, j


class AsymmetricEntry(InputError):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist({i}, {j}) != dist({j}, {i})")
        self.i, self.j = i, j


class NegativeEntry(InputError):
    def __init__(self, i: int, j: int):
        super().__init__(f"dist({i}, {j}) is negative")
        self.i, self.j = i, j


class NonzeroDiagonal(InputError):
    def __init__(self, i: int):
        super().__init__(f"dist({i}, {i}) is not zero")
        self.i = i


class ZeroOffDiagonal(InputError):
    def __init__(self, i: int, j: int):
        super().__init__(f"distinct points {i} and {j} are at distance 0")
        self.i, self.j = i, j


class TriangleViolation(InputError):
    """``dist(i, k) > dist(i, j) + dist(j, k)``."""

    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"triangle inequality fails: dist({i},{k}) > dist({i},{j}) + dist({j},{k})")
        self.i, self.j, self.k = i, j, k


class EmptySubset(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class EmptyPointSet(InputError):
    pass


class NonpositiveScale(InputError):
    pass


class BadBlockCount(InputError):
    pass


class SizeMismatch(InputError):
    pass


class NonpositiveLambda(InputError):
    pass


class LambdaOutOfRange(InputError):
    pass


class NonpositiveD(InputError):
    pass


class BudgetExceeded(GHSimplexError):
    """A solver hit its configured work budget."""
