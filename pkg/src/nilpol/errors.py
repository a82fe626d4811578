"""Exception hierarchy.

Validation errors carry the index data needed to point back at the
offending input (``pairs`` lists the bracket pairs ``(i, j)``, 1-based,
that a source span can be attached to).
"""

from __future__ import annotations


class NilpolError(Exception):
    """Base class for every error raised by the package."""


class DimensionMismatch(NilpolError, ValueError):
    pass


class AmbientMismatch(DimensionMismatch):
    pass


class IndexOutOfRange(NilpolError, IndexError):
    pass


class SingularMatrix(NilpolError, ArithmeticError):
    pass


class LieAlgebraError(NilpolError, ValueError):
    """An algebra failed one of the construction-time checks."""

    condition = "lie algebra"

    def __init__(self, message: str, pairs=()):
        super().__init__(message)
        self.pairs = tuple(pairs)
        self.span = None


class AntisymmetryConflict(LieAlgebraError):
    condition = "antisymmetry [X,Y] = -[Y,X]"


class JacobiViolation(LieAlgebraError):
    condition = "Jacobi identity"

    def __init__(self, triple, jacobiator, message=None):
        i, j, k = triple
        msg = message or (
            f"Jacobi identity fails for (Z{i}, Z{j}, Z{k}): "
            f"Jacobiator = {list(map(str, jacobiator))}"
        )
        super().__init__(msg, pairs=[(i, j), (j, k), (k, i)])
        self.triple = triple
        self.jacobiator = tuple(jacobiator)


class MalcevViolation(LieAlgebraError):
    condition = "strong Malcev basis (each span{Z1..Zj} an ideal)"

    def __init__(self, i, j, k, value):
        super().__init__(
            f"[Z{i},Z{j}] has coefficient {value} on Z{k}, but k >= min(i,j) "
            f"breaks the chain of ideals",
            pairs=[(i, j)],
        )
        self.index = (i, j, k)
        self.value = value


class NotNilpotent(LieAlgebraError):
    condition = "nilpotency"


class CenterNotInitial(LieAlgebraError):
    condition = "Malcev basis passing through the center"


class ZariskiViolation(NilpolError, ArithmeticError):
    """A leading generator block needed by the closed form is singular."""

    def __init__(self, order: int):
        super().__init__(
            f"det M_0 of the leading {order}x{order} generator block vanishes; "
            f"the functional lies outside the Zariski-open set"
        )
        self.order = order


class InvalidGeneratorCount(NilpolError, ValueError):
    pass


class ParseError(NilpolError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ArityMismatch(ParseError):
    pass
