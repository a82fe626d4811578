"""Nilpotent Lie algebras given by structure constants over a strong Malcev basis.

Indices in the public constructor :func:`make_algebra` are 1-based, matching
the ``Z1..Zn`` labels used everywhere in input and output. Internally the
brackets are kept in a sparse dict keyed by 0-based pairs ``(i, j)`` with
``i > j``; the dense tensor is available through :meth:`LieAlgebra.structure_constants`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    AntisymmetryConflict,
    CenterNotInitial,
    DimensionMismatch,
    IndexOutOfRange,
    JacobiViolation,
    MalcevViolation,
    NotNilpotent,
)
from .linalg import ZERO, RatMatrix, Subspace, Vector, dot, nullspace, unit, vec

Sparse = dict  # {basis index: Fraction}, zero entries dropped


def _sparse(v: Sequence[Fraction]) -> Sparse:
    return {k: x for k, x in enumerate(v) if x}


def _dense(s: Mapping[int, Fraction], n: int) -> Vector:
    out = [ZERO] * n
    for k, x in s.items():
        out[k] = x
    return tuple(out)


def _axpy(acc: Sparse, coef: Fraction, s: Mapping[int, Fraction]) -> None:
    for k, x in s.items():
        v = acc.get(k, ZERO) + coef * x
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


@dataclass(frozen=True)
class Functional:
    """A linear functional, stored by its values on the basis."""

    values: tuple

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", vec(values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def scaled(self, t) -> "Functional":
        t = Fraction(t)
        return Functional(t * x for x in self.values)

    def __call__(self, x: Sequence) -> Fraction:
        return evaluate(self, x)


def as_functional(ell, n: int | None = None) -> Functional:
    f = ell if isinstance(ell, Functional) else Functional(ell)
    if n is not None and len(f) != n:
        raise DimensionMismatch(f"functional has {len(f)} entries, algebra dimension is {n}")
    return f


def evaluate(ell, x: Sequence) -> Fraction:
    """The pairing ell(X) = sum_i ell[i] * X[i]."""
    ell = as_functional(ell)
    x = vec(x)
    if len(x) != len(ell):
        raise DimensionMismatch(f"functional of length {len(ell)} applied to vector of length {len(x)}")
    return dot(ell.values, x)


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Structure constants of a nilpotent Lie algebra in a strong Malcev basis.

    Use :func:`make_algebra` to build one; the constructor here expects the
    already antisymmetrised sparse table and runs the validator unless
    ``validate=False``.
    """

    n: int
    table: Mapping[tuple[int, int], Mapping[int, Fraction]]
    basis_names: tuple[str, ...] = ()
    center_dim: int = field(default=-1)
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        names = tuple(self.basis_names) or tuple(f"Z{i + 1}" for i in range(self.n))
        if len(names) != self.n:
            raise DimensionMismatch(f"{len(names)} basis names for dimension {self.n}")
        object.__setattr__(self, "basis_names", names)
        if self.validate:
            _validate(self)
        cd = self.center().dim if self.center_dim < 0 or self.validate else self.center_dim
        object.__setattr__(self, "center_dim", cd)
        if self.validate:
            _check_center_initial(self)

    def bracket_basis(self, i: int, j: int) -> Sparse:
        """[Z_i, Z_j] as a sparse dict, 0-based indices."""
        if i > j:
            return self.table.get((i, j), {})
        if i < j:
            s = self.table.get((j, i))
            return {k: -x for k, x in s.items()} if s else {}
        return {}

    def structure_constants(self) -> list[list[list[Fraction]]]:
        """Dense tensor ``c[i][j][k]`` (0-based) with [Z_i, Z_j] = sum_k c[i][j][k] Z_k."""
        n = self.n
        return [[list(_dense(self.bracket_basis(i, j), n)) for j in range(n)] for i in range(n)]

    def nonzero_brackets(self) -> list[tuple[int, int, Vector]]:
        """``(i, j, coeffs)`` with i > j, 1-based, for every nonzero bracket."""
        return [(i + 1, j + 1, _dense(s, self.n)) for (i, j), s in sorted(self.table.items())]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        return bracket(self, x, y)

    def center(self) -> Subspace:
        return center(self)

    def is_abelian(self) -> bool:
        return not self.table

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.n == other.n and _normalised(self.table) == _normalised(other.table)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in _normalised(self.table).items()))))


def _normalised(table):
    return {k: dict(v) for k, v in table.items() if v}


def make_algebra(
    n: int,
    brackets: Iterable[tuple[int, int, Sequence | Mapping[int, object]]],
    basis_names: Sequence[str] | None = None,
    validate: bool = True,
) -> LieAlgebra:
    """Build a LieAlgebra from 1-based bracket data ``(i, j, coeffs)``.

    ``coeffs`` is either a length-``n`` vector or a mapping ``{k: coef}`` with
    1-based ``k``. ``[Z_j, Z_i]`` is filled in by antisymmetry; a pair given in
    both orders must agree up to sign.
    """
    if n < 1:
        raise DimensionMismatch("dimension must be positive")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    given: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j, coeffs in brackets:
        for idx in (i, j):
            if not 1 <= idx <= n:
                raise IndexOutOfRange(f"basis index {idx} outside 1..{n}")
        if isinstance(coeffs, Mapping):
            s = {}
            for k, x in coeffs.items():
                if not 1 <= k <= n:
                    raise IndexOutOfRange(f"basis index {k} outside 1..{n}")
                x = Fraction(x)
                if x:
                    s[k - 1] = x
        else:
            v = vec(coeffs)
            if len(v) != n:
                raise DimensionMismatch(f"coefficient vector of length {len(v)} for dimension {n}")
            s = _sparse(v)
        if i == j:
            if s:
                raise AntisymmetryConflict(f"[Z{i},Z{i}] must be zero", pairs=[(i, i)])
            continue
        a, b = i - 1, j - 1
        if a < b:
            a, b = b, a
            s = {k: -x for k, x in s.items()}
        key = (a, b)
        if key in given and table.get(key, {}) != s:
            pi, pj = given[key]
            raise AntisymmetryConflict(
                f"[Z{i},Z{j}] conflicts with earlier [Z{pi},Z{pj}] (must be negatives of each other)",
                pairs=[(i, j), (pi, pj)],
            )
        given[key] = (i, j)
        if s:
            table[key] = s
    return LieAlgebra(n, table, tuple(basis_names or ()), validate=validate)


def _check_malcev(g: LieAlgebra) -> None:
    for (i, j), s in sorted(g.table.items()):
        # i > j, so min(i, j) == j
        for k in sorted(s):
            if k >= j:
                raise MalcevViolation(i + 1, j + 1, k + 1, s[k])


def _bracket_with_basis(g: LieAlgebra, i: int, y: Mapping[int, Fraction]) -> Sparse:
    acc: Sparse = {}
    for b, yb in y.items():
        s = g.bracket_basis(i, b)
        if s:
            _axpy(acc, yb, s)
    return acc


def jacobiator(g: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[Z_i,[Z_j,Z_k]] + [Z_j,[Z_k,Z_i]] + [Z_k,[Z_i,Z_j]], 0-based indices."""
    acc: Sparse = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        _axpy(acc, Fraction(1), _bracket_with_basis(g, a, g.bracket_basis(b, c)))
    return _dense(acc, g.n)


def _check_jacobi(g: LieAlgebra) -> None:
    if not g.table:
        return
    for i, j, k in combinations(range(g.n), 3):
        if not (g.bracket_basis(j, k) or g.bracket_basis(k, i) or g.bracket_basis(i, j)):
            continue
        # report in descending order, e.g. (Z5, Z4, Z3) -> [Z5,[Z4,Z3]] + ...
        jac = jacobiator(g, k, j, i)
        if any(jac):
            raise JacobiViolation((k + 1, j + 1, i + 1), jac)


def lower_central_series(g: LieAlgebra, max_steps: int | None = None) -> list[Subspace]:
    """g = C^0 > C^1 = [g, g] > ... until it stabilises."""
    n = g.n
    terms = [Subspace.full(n)]
    for _ in range(max_steps if max_steps is not None else n + 1):
        cur = terms[-1]
        gens = []
        for i in range(n):
            for b in cur.basis:
                s = _bracket_with_basis(g, i, _sparse(b))
                if s:
                    gens.append(_dense(s, n))
        nxt = Subspace.span(gens, n)
        if nxt == cur:
            break
        terms.append(nxt)
    return terms


def _check_nilpotent(g: LieAlgebra) -> None:
    last = lower_central_series(g)[-1]
    if last.dim:
        raise NotNilpotent(
            f"lower central series stalls at a subspace of dimension {last.dim}",
            pairs=[],
        )


def _check_center_initial(g: LieAlgebra) -> None:
    z = center(g)
    if z != Subspace.coordinate(g.n, range(z.dim)):
        first = next(i for i in range(g.n) if not z.contains(unit(g.n, i)))
        raise CenterNotInitial(
            f"center has dimension {z.dim} but Z{first + 1} is not central; "
            f"the basis must list a basis of the center first",
            pairs=[(i + 1, j + 1) for (i, j) in g.table if first in (i, j)],
        )


def _validate(g: LieAlgebra) -> None:
    _check_malcev(g)
    _check_jacobi(g)
    _check_nilpotent(g)


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    x, y = vec(x), vec(y)
    if len(x) != g.n or len(y) != g.n:
        raise DimensionMismatch(f"bracket expects vectors of length {g.n}")
    acc: Sparse = {}
    for (i, j), s in g.table.items():
        # table holds [Z_i, Z_j] for i > j; pick up both orders
        coef = x[i] * y[j] - x[j] * y[i]
        if coef:
            _axpy(acc, coef, s)
    return _dense(acc, g.n)


def center(g: LieAlgebra) -> Subspace:
    """{X : [X, Z_i] = 0 for all i}, via the nullspace of the stacked adjoints."""
    n = g.n
    rows = []
    for i in range(n):
        # row (i, k): X -> coefficient of Z_k in [X, Z_i]
        block = [[ZERO] * n for _ in range(n)]
        nonzero = False
        for a in range(n):
            for k, x in g.bracket_basis(a, i).items():
                block[k][a] = x
                nonzero = True
        if nonzero:
            rows.extend(r for r in block if any(r))
    if not rows:
        return Subspace.full(n)
    return nullspace(RatMatrix(rows, cols=n))


def basis_vector(g: LieAlgebra, i: int) -> Vector:
    """Z_i as a coordinate vector, 1-based."""
    if not 1 <= i <= g.n:
        raise IndexOutOfRange(f"basis index {i} outside 1..{g.n}")
    return unit(g.n, i - 1)


def ideal_chain_member(g: LieAlgebra, j: int) -> Subspace:
    """g_j = span{Z_1, ..., Z_j}."""
    return Subspace.coordinate(g.n, range(j))
