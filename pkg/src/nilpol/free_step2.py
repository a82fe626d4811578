"""Free nilpotent Lie algebras of step two and their closed-form polarizations.

Basis order: the m(m-1)/2 central elements Z_ik (i < k, lexicographic) come
first, then the generators Z_1..Z_m. Generator-indexed quantities (the
blocks M_0(ell_j), the vectors v(ell_j), the embedding mu_k) are indexed by
generator number and translated to ambient positions through the layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import IndexOutOfRange, InvalidGeneratorCount, SingularMatrix, ZariskiViolation
from .lie import LieAlgebra, as_functional, make_algebra
from .linalg import ONE, RatMatrix, Subspace, Vector, inverse, rank
from .vergne import Method, PolarizationResult


@dataclass(frozen=True)
class FreeStep2Layout:
    m: int

    def __post_init__(self):
        if self.m < 2:
            raise InvalidGeneratorCount(f"free step-2 algebra needs m >= 2 generators, got {self.m}")

    @property
    def center_dim(self) -> int:
        return self.m * (self.m - 1) // 2

    @property
    def n(self) -> int:
        return self.center_dim + self.m

    def central_pairs(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.m + 1):
            for k in range(i + 1, self.m + 1):
                yield i, k

    def central_index(self, i: int, k: int) -> int:
        """1-based ambient position of Z_ik, 1 <= i < k <= m."""
        if not 1 <= i < k <= self.m:
            raise IndexOutOfRange(f"no central element Z_({i},{k}) for m={self.m}")
        # rows before i hold (m-1) + (m-2) + ... + (m-i+1) pairs
        before = (i - 1) * self.m - (i - 1) * i // 2
        return before + (k - i)

    def generator_index(self, i: int) -> int:
        """1-based ambient position of the generator Z_i."""
        if not 1 <= i <= self.m:
            raise IndexOutOfRange(f"no generator Z{i} for m={self.m}")
        return self.center_dim + i

    def basis_names(self) -> tuple[str, ...]:
        sep = "" if self.m < 10 else ","
        central = tuple(f"Z{i}{sep}{k}" for i, k in self.central_pairs())
        return central + tuple(f"Z{i}" for i in range(1, self.m + 1))

    def mu(self, coords) -> Vector:
        """Send (z_1..z_k) to z_1 Z_1 + ... + z_k Z_k, generators in ambient coordinates."""
        out = [Fraction(0)] * self.n
        for t, z in enumerate(coords, start=1):
            out[self.generator_index(t) - 1] = Fraction(z)
        return tuple(out)


def build_free_step2(m: int) -> tuple[LieAlgebra, FreeStep2Layout]:
    layout = FreeStep2Layout(m)
    brackets = [
        (layout.generator_index(i), layout.generator_index(k), {layout.central_index(i, k): 1})
        for i, k in layout.central_pairs()
    ]
    g = make_algebra(layout.n, brackets, basis_names=layout.basis_names())
    return g, layout


def _ell(layout: FreeStep2Layout, ell):
    return as_functional(ell, layout.n)


def _pair_value(layout: FreeStep2Layout, ell, a: int, b: int) -> Fraction:
    """ell[Z_a, Z_b] for generators a, b."""
    if a == b:
        return Fraction(0)
    if a < b:
        return ell[layout.central_index(a, b) - 1]
    return -ell[layout.central_index(b, a) - 1]


def m0_generator_block(layout: FreeStep2Layout, ell, j: int) -> RatMatrix:
    """M_0(ell_j): entries ell[Z_a, Z_b] over generators a, b <= j."""
    ell = _ell(layout, ell)
    if not 1 <= j <= layout.m:
        raise IndexOutOfRange(f"generator block order {j} outside 1..{layout.m}")
    return RatMatrix.skew_from_upper(j, lambda a, b: _pair_value(layout, ell, a + 1, b + 1))


def v_vector(layout: FreeStep2Layout, ell, j: int) -> Vector:
    """Last column of M_0(ell_j) above the diagonal: (ell[Z_a, Z_j])_{a < j}."""
    ell = _ell(layout, ell)
    if not 2 <= j <= layout.m:
        raise IndexOutOfRange(f"v(ell_j) needs 2 <= j <= {layout.m}, got {j}")
    return tuple(_pair_value(layout, ell, a, j) for a in range(1, j))


def w_vector(layout: FreeStep2Layout, ell, j: int) -> Vector:
    """Last row of M_0(ell_j) left of the diagonal; always -v(ell_j)^T."""
    return tuple(-x for x in v_vector(layout, ell, j))


def zariski_orders(layout: FreeStep2Layout) -> list[int]:
    """Orders of the leading generator blocks that must be nonsingular.

    Odd j > 1 asks for det M_0(ell_{j-1}) != 0. Every even order up to m is
    included: for even m the top block M_0(ell_m) is needed too, otherwise
    the last even block may be singular and the closed form loses a line.
    """
    return list(range(2, layout.m + 1, 2))


def zariski_failure(layout: FreeStep2Layout, ell) -> int | None:
    """Order of the first singular required block, or None."""
    ell = _ell(layout, ell)
    for order in zariski_orders(layout):
        if rank(m0_generator_block(layout, ell, order)) < order:
            return order
    return None


def zariski_check(layout: FreeStep2Layout, ell) -> bool:
    return zariski_failure(layout, ell) is None


def l1_null_vector(layout: FreeStep2Layout, ell, j: int) -> Vector:
    """Generator coordinates (length j) of Z_j - mu_{j-1}(M_0(ell_{j-1})^{-1} v(ell_j)), odd j > 1."""
    if j < 3 or j % 2 == 0:
        raise IndexOutOfRange(f"the closed-form null line exists for odd j >= 3, got {j}")
    try:
        inv = inverse(m0_generator_block(layout, ell, j - 1))
    except SingularMatrix:
        raise ZariskiViolation(j - 1) from None
    y = inv @ v_vector(layout, ell, j)
    return tuple(-x for x in y) + (ONE,)


def polarize_free(layout: FreeStep2Layout, ell) -> PolarizationResult:
    """z(g) + R Z_1 + sum over odd j of R (Z_j - mu_{j-1}(M_0(ell_{j-1})^{-1} v(ell_j)))."""
    ell = _ell(layout, ell)
    bad = zariski_failure(layout, ell)
    if bad is not None:
        raise ZariskiViolation(bad)
    n, dz = layout.n, layout.center_dim
    vectors = [tuple(ONE if k == i else Fraction(0) for k in range(n)) for i in range(dz)]
    vectors.append(layout.mu([1]))
    trace = [(dz + 1, Subspace.span(vectors, n))]
    for j in range(3, layout.m + 1, 2):
        line = layout.mu(l1_null_vector(layout, ell, j))
        vectors.append(line)
        trace.append((dz + j, Subspace.span([line], n)))
    return PolarizationResult(
        Subspace.span(vectors, n), 2 * (layout.m // 2), Method.free_step2, tuple(trace), tuple(vectors)
    )


def closed_form_dim(m: int) -> int:
    s = m // 2
    return m * (m - 1) // 2 + s + (m % 2)

