"""Exception hierarchy for heiscat.

Every error raised on purpose by the library derives from HeisCatError, which
is itself a ValueError so callers that only care about "bad input" can catch
the builtin.  Validation errors carry the offending basis indices.
"""
from __future__ import annotations

from typing import Sequence, Tuple


class HeisCatError(ValueError):
    """Base class for all library errors."""


# ---------------------------------------------------------------------------
# Algebra validation
# ---------------------------------------------------------------------------

class AlgebraError(HeisCatError):
    """A spec violates one of the Frobenius algebra invariants."""

    def __init__(self, message: str, indices: Sequence[int] = ()):
        self.indices: Tuple[int, ...] = tuple(indices)
        if self.indices:
            message = f"{message} (basis indices {list(self.indices)})"
        super().__init__(message)


class MalformedSpec(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class NotUnital(AlgebraError):
    pass


class GradingViolation(AlgebraError):
    pass


class TraceDegenerate(AlgebraError):
    pass


class TraceNotHomogeneous(AlgebraError):
    pass


class InvariantViolation(AlgebraError):
    """A derived table (dual basis, Nakayama map) fails its defining law."""


class UnknownBuiltin(HeisCatError):
    pass


# ---------------------------------------------------------------------------
# Arithmetic and shapes
# ---------------------------------------------------------------------------

class RankMismatch(HeisCatError):
    pass


class IndexOutOfRange(HeisCatError):
    pass


class NotIdempotent(HeisCatError):
    pass


class NotDegreeZero(HeisCatError):
    pass


class NotHomogeneous(HeisCatError):
    pass


class ShapeMismatch(HeisCatError):
    pass


class NotIntertwining(HeisCatError):
    """An operator fails to commute with the action it must respect."""


class SizeLimit(HeisCatError):
    """A computation would enumerate more than HEISCAT_SIZE_CAP basis vectors."""


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------

class BoundaryMismatch(HeisCatError):
    pass


class DegreeMismatch(HeisCatError):
    pass


# ---------------------------------------------------------------------------
# Heisenberg algebra
# ---------------------------------------------------------------------------

class UnknownGenerator(HeisCatError):
    pass


class NotTypeQ(HeisCatError):
    pass


class NotEven(HeisCatError):
    pass


class ParseError(HeisCatError):
    """Text input could not be parsed; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int = 0):
        self.position = position
        super().__init__(f"{message} at position {position}")
