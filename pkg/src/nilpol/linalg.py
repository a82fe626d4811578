"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; nothing here ever touches a float.
Matrices are immutable row-major tuples, subspaces are stored by their
unique reduced row-echelon basis so that set equality is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DimensionMismatch, SingularMatrix

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a 'p/q' string")
    return Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def unit(n: int, i: int) -> Vector:
    """Coordinate vector with a one in 0-based position ``i``."""
    return tuple(ONE if k == i else ZERO for k in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


class RatMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(vec(row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([unit(n, i) for i in range(n)], cols=n)

    @classmethod
    def skew_from_upper(cls, n: int, upper) -> "RatMatrix":
        """Build the n x n skew matrix whose (i, j) entry, i < j, is ``upper(i, j)``.

        Indices passed to ``upper`` are 0-based.
        """
        a = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = to_rational(upper(i, j))
                a[i][j] = v
                a[j][i] = -v
        return cls(a, cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> Vector:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._data), cols=self.rows) if self.rows else RatMatrix.zeros(self.cols, 0)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix([[self._data[i][j] for j in cols] for i in rows], cols=len(cols))

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        a = self._data
        return all(a[i][j] == -a[j][i] for i in range(self.rows) for j in range(i, self.cols))

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
            return RatMatrix([[dot(r, c) for c in ocols] for r in self._data], cols=other.cols)
        v = vec(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(dot(r, v) for r in self._data)

    def __mul__(self, scalar) -> "RatMatrix":
        s = to_rational(scalar)
        return RatMatrix([[s * x for x in r] for r in self._data], cols=self.cols)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self._data)
        return f"RatMatrix([{body}])"


def _as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan elimination; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = ONE / prow[c]
        if inv != ONE:
            prow[:] = [x * inv if x else ZERO for x in prow]
        support = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for k in support:
                    ri[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m) -> tuple[RatMatrix, int]:
    """Reduced row-echelon form of ``m`` and its rank."""
    m = _as_matrix(m)
    rows, pivots = _rref_rows(m.tolist(), m.cols)
    return RatMatrix(rows, cols=m.cols), len(pivots)


def rank(m) -> int:
    m = _as_matrix(m)
    return len(_rref_rows(m.tolist(), m.cols)[1])


def _kernel_vectors(m: RatMatrix) -> list[Vector]:
    rows, pivots = _rref_rows(m.tolist(), m.cols)
    pivset = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            if rows[r][f]:
                v[pc] = -rows[r][f]
        out.append(tuple(v))
    return out


def nullspace(m) -> "Subspace":
    """Right nullspace ``{v : m v = 0}`` as a canonical subspace."""
    m = _as_matrix(m)
    return Subspace.span(_kernel_vectors(m), m.cols)


def inverse(m) -> RatMatrix:
    """Exact inverse; raises :class:`SingularMatrix` if ``m`` is not invertible."""
    m = _as_matrix(m)
    n = m.rows
    if m.cols != n:
        raise DimensionMismatch(f"inverse needs a square matrix, got {m.shape}")
    aug = [list(m.row(i)) + list(unit(n, i)) for i in range(n)]
    rows, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(f"matrix of order {n} has rank {sum(p < n for p in pivots)}")
    return RatMatrix([r[n:] for r in rows], cols=n)


def solve(m, b) -> Vector:
    """Unique solution of ``m x = b`` for square nonsingular ``m``."""
    return inverse(m) @ b


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = [list(vec(v)) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, pivots = _rref_rows(vs, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit(ambient_dim, i) for i in range(ambient_dim)))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        """Span of the 0-based coordinate vectors in ``indices``."""
        return cls.span([unit(ambient_dim, i) for i in indices], ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return [next(k for k, x in enumerate(b) if x) for b in self.basis]

    def contains(self, v: Sequence) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        # reduce against the echelon basis; exact membership test
        w = list(v)
        for b, p in zip(self.basis, self.pivots()):
            f = w[p]
            if f:
                w = [x - f * y for x, y in zip(w, b)]
        return not any(w)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __repr__(self) -> str:
        rows = "; ".join("(" + ", ".join(map(str, b)) + ")" for b in self.basis)
        return f"Subspace({self.ambient_dim}, [{rows}])"


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if not b.basis:
        return a
    if not a.basis:
        return b
    return Subspace.span(a.basis + b.basis, a.ambient_dim)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a.basis == b.basis


def embed(v: Sequence, ambient_dim: int, offset: int = 0) -> Vector:
    """Place ``v`` at 0-based ``offset`` inside a zero vector of length ``ambient_dim``."""
    v = vec(v)
    if offset < 0 or offset + len(v) > ambient_dim:
        raise DimensionMismatch(f"cannot embed length {len(v)} at offset {offset} into {ambient_dim}")
    return (ZERO,) * offset + v + (ZERO,) * (ambient_dim - offset - len(v))
