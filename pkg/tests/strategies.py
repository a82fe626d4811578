"""Random inputs shared by the property and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from nilpol import catalog
from nilpol.errors import CenterNotInitial
from nilpol.lie import LieAlgebra, make_algebra
from nilpol.linalg import RatMatrix, inverse

rationals = st.builds(
    Fraction,
    st.integers(-9, 9),
    st.integers(1, 5),
)

nonzero_rationals = rationals.filter(bool)


def functionals(n: int, zero_weight: float = 0.2):
    """Entries are zero with some probability so degenerate cases show up."""
    entry = st.one_of(st.just(Fraction(0)), rationals) if zero_weight else rationals
    return st.lists(entry, min_size=n, max_size=n)


def random_rational(rng: random.Random, zero_prob: float = 0.15) -> Fraction:
    if rng.random() < zero_prob:
        return Fraction(0)
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def random_functional(rng: random.Random, n: int, zero_prob: float = 0.15) -> list[Fraction]:
    return [random_rational(rng, zero_prob) for _ in range(n)]


def random_matrix(rng: random.Random, rows: int, cols: int, zero_prob: float = 0.3) -> RatMatrix:
    return RatMatrix([[random_rational(rng, zero_prob) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_skew(rng: random.Random, n: int, zero_prob: float = 0.3) -> RatMatrix:
    return RatMatrix.skew_from_upper(n, lambda i, j: random_rational(rng, zero_prob))


def flag_preserving_change(g: LieAlgebra, rng: random.Random) -> LieAlgebra:
    """Rewrite g in the basis Z'_i = t_i Z_i + sum_{k<i} u_ik Z_k.

    A unit lower-triangular change (times a diagonal) keeps every g_j, so the
    new basis is again strong Malcev and passes through the center.
    """
    n = g.n
    U = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        U[i][i] = Fraction(rng.choice([1, -1, 2, -3, Fraction(1, 2)]))
        for k in range(i):
            U[i][k] = Fraction(rng.randint(-2, 2))
    Um = RatMatrix(U)
    back = inverse(Um.transpose())  # Z-coordinates x -> Z'-coordinates
    brackets = []
    for i in range(n):
        for j in range(i):
            x = g.bracket(Um.row(i), Um.row(j))
            y = back @ x
            if any(y):
                brackets.append((i + 1, j + 1, y))
    return make_algebra(n, brackets)


def random_step2(rng: random.Random, max_dim: int = 7) -> LieAlgebra:
    """Random two-step algebra: generators above a central block of size k."""
    while True:
        n = rng.randint(3, max_dim)
        k = rng.randint(1, n - 2)
        brackets = []
        for a in range(k + 1, n + 1):
            for b in range(k + 1, a):
                if rng.random() < 0.7:
                    coeffs = {t: random_rational(rng, 0.4) for t in range(1, k + 1)}
                    brackets.append((a, b, coeffs))
        try:
            g = make_algebra(n, brackets)
        except CenterNotInitial:
            continue
        if not g.is_abelian():
            return g


SEED_ALGEBRAS = [
    "heisenberg",
    "heisenberg5",
    "heisenberg_plus_line",
    "filiform4",
    "filiform5",
    "free_step2_m2",
    "free_step2_m3",
    "free_step2_m4",
]


def random_algebra(rng: random.Random) -> LieAlgebra:
    if rng.random() < 0.4:
        return random_step2(rng)
    return flag_preserving_change(catalog.get(rng.choice(SEED_ALGEBRAS)).algebra, rng)
