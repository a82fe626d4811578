"""Independent certification of polarizing subalgebras.

Only the bracket, the pairing with ell, exact rank and subspace membership
are used here; none of the polarization routines are imported.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch
from .lie import LieAlgebra, as_functional, evaluate
from .linalg import RatMatrix, Subspace, Vector, nullspace, rank, unit


@dataclass(frozen=True)
class Witness:
    condition: str  # "subalgebra", "isotropy" or "dimension"
    x: Vector | None
    y: Vector | None
    value: object


@dataclass(frozen=True)
class VerificationReport:
    is_subalgebra: bool
    is_isotropic: bool
    dimension_ok: bool
    expected_dim: int
    actual_dim: int
    witnesses: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return self.is_subalgebra and self.is_isotropic and self.dimension_ok


def _form_matrix(g: LieAlgebra, ell) -> RatMatrix:
    # built from bracket + evaluate on basis vectors, independent of build_M
    n = g.n
    return RatMatrix.skew_from_upper(n, lambda i, j: evaluate(ell, g.bracket(unit(n, i), unit(n, j))))


def _check(g: LieAlgebra, ell, P: Subspace) -> None:
    if P.ambient_dim != g.n:
        raise DimensionMismatch(f"subspace lives in dimension {P.ambient_dim}, algebra in {g.n}")


def isotropy_witness(g: LieAlgebra, ell, P: Subspace) -> Witness | None:
    """First basis pair (X, Y) of P with ell[X, Y] != 0."""
    for x, y in itertools.combinations(P.basis, 2):
        val = evaluate(ell, g.bracket(x, y))
        if val:
            return Witness("isotropy", x, y, val)
    return None


def closure_witness(g: LieAlgebra, P: Subspace) -> Witness | None:
    for x, y in itertools.combinations(P.basis, 2):
        b = g.bracket(x, y)
        if not P.contains(b):
            return Witness("subalgebra", x, y, b)
    return None


def perp(g: LieAlgebra, ell, P: Subspace) -> Subspace:
    """{Y : ell[X, Y] = 0 for all X in P}."""
    if not P.basis:
        return Subspace.full(g.n)
    n = g.n
    rows = [[evaluate(ell, g.bracket(x, unit(n, k))) for k in range(n)] for x in P.basis]
    return nullspace(RatMatrix(rows, cols=n))


def verify_polarization(g: LieAlgebra, ell, P: Subspace) -> VerificationReport:
    ell = as_functional(ell, g.n)
    _check(g, ell, P)
    expected = g.n - rank(_form_matrix(g, ell)) // 2
    witnesses = []
    cw = closure_witness(g, P)
    if cw:
        witnesses.append(cw)
    iw = isotropy_witness(g, ell, P)
    if iw:
        witnesses.append(iw)
    dim_ok = P.dim == expected
    if not dim_ok:
        # a vector orthogonal to P but outside it shows P can still be enlarged
        ext = next((v for v in perp(g, ell, P).basis if not P.contains(v)), None)
        witnesses.append(Witness("dimension", ext, None, (P.dim, expected)))
    return VerificationReport(cw is None, iw is None, dim_ok, expected, P.dim, tuple(witnesses))


def is_subordinated(g: LieAlgebra, ell, P: Subspace) -> bool:
    ell = as_functional(ell, g.n)
    _check(g, ell, P)
    return isotropy_witness(g, ell, P) is None


def maximality_oracle(g: LieAlgebra, ell, P: Subspace, grid: int = 1) -> Vector | None:
    """Brute-force search for a vector v outside P with P + Qv isotropic and closed.

    Candidates are the basis vectors and every vector with entries in
    ``-grid..grid``. Returns the first extension found, or None when P is
    maximal among them. Intended for n <= 5.
    """
    ell = as_functional(ell, g.n)
    _check(g, ell, P)
    n = g.n
    rng = range(-grid, grid + 1)
    candidates = itertools.chain(
        (unit(n, i) for i in range(n)),
        (tuple(map(Fraction, c)) for c in itertools.product(rng, repeat=n)),
    )
    for v in candidates:
        if not any(v) or P.contains(v):
            continue
        if any(evaluate(ell, g.bracket(v, x)) for x in P.basis):
            continue
        bigger = Subspace.span(P.basis + (v,), n)
        if closure_witness(g, bigger) is None:
            return v
    return None
