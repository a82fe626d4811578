"""Vergne polarizing subalgebras from the skew form matrix M(ell).

Two routes compute the same subspace:

* :func:`polarize_basic` sums the nullspaces of every leading block M_j(ell),
  j = 1..n, each zero-padded into ambient coordinates.
* :func:`polarize_refined` starts from z(g) + R Z_{dz+1} and only adds the
  nullspaces of the non-central blocks M_0 whose size is not in the index
  set I(ell) (blocks of full rank contribute nothing beyond the center).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import IndexOutOfRange
from .lie import LieAlgebra, as_functional, evaluate
from .linalg import RatMatrix, Subspace, embed, nullspace, rank, subspace_sum


class Method(str, Enum):
    basic = "basic"
    refined = "refined"
    free_step2 = "free_step2"


@dataclass(frozen=True)
class PolarizationResult:
    p_basis: Subspace
    orbit_dim: int
    method: Method
    # (j, r(ell_j) in ambient coordinates), in the order they were summed
    per_j_nullspaces: tuple = field(default=(), compare=False)
    # generating vectors as produced by a closed formula, before canonicalisation
    spanning: tuple = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return self.p_basis.dim


@dataclass(frozen=True)
class IndexSetI:
    members: frozenset
    # set when the algebra is abelian and the range 1 < s <= n - dim z is empty
    abelian: bool = False

    def __contains__(self, s) -> bool:
        return s in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def build_M(g: LieAlgebra, ell) -> RatMatrix:
    """The n x n skew matrix with (i, j) entry ell[Z_i, Z_j]."""
    ell = as_functional(ell, g.n)
    n = g.n
    a = [[0] * n for _ in range(n)]
    for (i, j), s in g.table.items():
        v = sum((ell[k] * x for k, x in s.items()), 0)
        a[i][j] = v
        a[j][i] = -v
    return RatMatrix(a, cols=n)


def leading_submatrix(m: RatMatrix, j: int) -> RatMatrix:
    """Top-left j x j block M_j(ell)."""
    if not 1 <= j <= m.rows:
        raise IndexOutOfRange(f"block order {j} outside 1..{m.rows}")
    idx = range(j)
    return m.submatrix(idx, idx)


def m_zero(g: LieAlgebra, ell, j: int, M: RatMatrix | None = None) -> RatMatrix:
    """Non-central block M_0(ell_j), rows and columns Z_{dz+1}..Z_j."""
    dz = g.center_dim
    if not dz + 1 < j <= g.n:
        raise IndexOutOfRange(f"M_0(ell_j) needs dim z + 1 < j <= n, got j={j} with dim z={dz}")
    M = build_M(g, ell) if M is None else M
    idx = range(dz, j)
    return M.submatrix(idx, idx)


def orbit_dimension(g: LieAlgebra, ell) -> int:
    """2d = rank M(ell), the dimension of the coadjoint orbit through ell."""
    return rank(build_M(g, ell))


def polarize_basic(g: LieAlgebra, ell) -> PolarizationResult:
    M = build_M(g, ell)
    n = g.n
    p = Subspace.zero(n)
    trace = []
    for j in range(1, n + 1):
        r = nullspace(leading_submatrix(M, j))
        r = Subspace(n, tuple(embed(b, n) for b in r.basis))
        trace.append((j, r))
        p = subspace_sum(p, r)
    return PolarizationResult(p, rank(M), Method.basic, tuple(trace))


def index_set_I(g: LieAlgebra, ell, M: RatMatrix | None = None) -> IndexSetI:
    """{1 < s <= n - dim z : rank M_0(ell_{dz+s}) = s}."""
    dz, n = g.center_dim, g.n
    if g.is_abelian():
        return IndexSetI(frozenset(), abelian=True)
    M = build_M(g, ell) if M is None else M
    members = set()
    for s in range(2, n - dz + 1):
        if rank(m_zero(g, ell, dz + s, M)) == s:
            members.add(s)
    return IndexSetI(frozenset(members))


def polarize_refined(g: LieAlgebra, ell) -> PolarizationResult:
    n, dz = g.n, g.center_dim
    M = build_M(g, ell)
    if g.is_abelian():
        return PolarizationResult(Subspace.full(n), 0, Method.refined, ())
    base = Subspace.coordinate(n, range(dz + 1))
    trace = [(dz + 1, base)]
    p = base
    members = index_set_I(g, ell, M)
    for s in range(2, n - dz + 1):
        if s in members:
            continue
        j = dz + s
        r = nullspace(m_zero(g, ell, j, M))
        vecs = [embed(b, n, offset=dz) for b in r.basis]
        r = Subspace(n, tuple(vecs)) if vecs else Subspace.zero(n)
        trace.append((j, r))
        p = subspace_sum(p, r)
    return PolarizationResult(p, rank(M), Method.refined, tuple(trace))


def polarize(g: LieAlgebra, ell, method: str = "auto") -> PolarizationResult:
    """Entry point; ``auto`` uses the refined route unless g is abelian."""
    method = method.value if isinstance(method, Method) else method
    if method == "auto":
        method = "refined" if g.center_dim >= 1 and not g.is_abelian() else "basic"
    if method == "basic":
        return polarize_basic(g, ell)
    if method == "refined":
        return polarize_refined(g, ell)
    raise ValueError(f"unknown method {method!r}")


def skew_form(g: LieAlgebra, ell, x: Sequence, y: Sequence):
    """B_ell(X, Y) = ell([X, Y])."""
    return evaluate(ell, g.bracket(x, y))
