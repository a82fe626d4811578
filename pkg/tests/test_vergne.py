from fractions import Fraction as F
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nilpol import catalog
from nilpol.errors import DimensionMismatch, IndexOutOfRange
from nilpol.free_step2 import build_free_step2
from nilpol.lie import evaluate, make_algebra
from nilpol.linalg import RatMatrix, Subspace, nullspace, rank, unit
from nilpol.verify import verify_polarization
from nilpol.vergne import (
    Method,
    build_M,
    index_set_I,
    leading_submatrix,
    m_zero,
    orbit_dimension,
    polarize,
    polarize_basic,
    polarize_refined,
)

from strategies import functionals, nonzero_rationals, random_algebra, random_functional

HEIS = catalog.get("heisenberg").algebra


def radical_oracle(g, ell, j):
    """r(ell_j) straight from its definition, with sympy doing the linear algebra."""
    n = g.n
    rows = [[evaluate(ell, g.bracket(unit(n, a), unit(n, b))) for b in range(j)] for a in range(j)]
    vecs = sympy.Matrix(j, j, [sympy.Rational(x.numerator, x.denominator) for r in rows for x in r]).nullspace() if j else []
    out = []
    for v in vecs:
        out.append([F(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in v] + [0] * (n - j))
    return Subspace.span(out, n)


def vergne_oracle(g, ell):
    p = Subspace.zero(g.n)
    for j in range(1, g.n + 1):
        p = p + radical_oracle(g, ell, j)
    return p


# -- examples ----------------------------------------------------------------


def test_build_M_examples():
    assert build_M(HEIS, [1, 0, 0]) == RatMatrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]])
    assert build_M(HEIS, [0, 0, 0]) == RatMatrix.zeros(3)
    g, _ = build_free_step2(3)
    M = build_M(g, [1, 0, 0, 0, 0, 0])
    expected = [[0] * 6 for _ in range(6)]
    expected[3][4], expected[4][3] = 1, -1
    assert M == RatMatrix(expected)
    with pytest.raises(DimensionMismatch):
        build_M(HEIS, [1, 0])


def test_leading_submatrix_examples():
    M = build_M(HEIS, [1, 0, 0])
    assert leading_submatrix(M, 3) == M
    assert leading_submatrix(M, 1) == RatMatrix([[0]])
    assert leading_submatrix(M, 2) == RatMatrix.zeros(2)
    with pytest.raises(IndexOutOfRange):
        leading_submatrix(M, 0)


def test_m_zero_examples():
    assert m_zero(HEIS, [1, 0, 0], 3) == RatMatrix([[0, -1], [1, 0]])
    assert m_zero(HEIS, [0, 0, 0], 3) == RatMatrix.zeros(2)
    g, _ = build_free_step2(3)
    assert m_zero(g, [1, 2, 3, 0, 0, 0], 6) == RatMatrix([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])
    with pytest.raises(IndexOutOfRange):
        m_zero(HEIS, [1, 0, 0], 2)


def test_polarize_basic_examples():
    r = polarize_basic(HEIS, [1, 0, 0])
    assert r.p_basis == Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    assert r.orbit_dim == 2
    assert [s for _, s in r.per_j_nullspaces] == [
        Subspace.coordinate(3, [0]),
        Subspace.coordinate(3, [0, 1]),
        Subspace.coordinate(3, [0]),
    ]
    for g in (HEIS, catalog.get("filiform5").algebra):
        assert polarize_basic(g, [0] * g.n).p_basis == Subspace.full(g.n)
    ab = catalog.get("abelian4").algebra
    assert polarize_basic(ab, [1, 2, 3, 4]).p_basis == Subspace.full(4)


def test_index_set_examples():
    assert set(index_set_I(HEIS, [1, 0, 0])) == {2}
    assert len(index_set_I(HEIS, [0, 0, 0])) == 0
    g, _ = build_free_step2(3)
    assert set(index_set_I(g, [1, 2, 3, 0, 0, 0])) == {2}
    flagged = index_set_I(catalog.get("abelian4").algebra, [1, 0, 0, 0])
    assert flagged.abelian and len(flagged) == 0


def test_polarize_refined_examples():
    r = polarize_refined(HEIS, [1, 0, 0])
    assert r.p_basis == Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    assert r.method is Method.refined
    ab = catalog.get("abelian4").algebra
    assert polarize_refined(ab, [1, 1, 1, 1]).p_basis == Subspace.full(4)
    g, _ = build_free_step2(3)
    p = polarize_refined(g, [1, 2, 3, 0, 0, 0]).p_basis
    # Z12, Z13, Z23, Z1 and Z3 + 3 Z1 - 2 Z2
    expected = Subspace.span([unit(6, 0), unit(6, 1), unit(6, 2), unit(6, 3), (0, 0, 0, 3, -2, 1)], 6)
    assert p == expected


def test_orbit_dimension_examples():
    assert orbit_dimension(HEIS, [1, 0, 0]) == 2
    assert orbit_dimension(HEIS, [0, 0, 0]) == 0
    g, _ = build_free_step2(4)
    # generic values on the center: the 4x4 generator block has Pfaffian 1*6 - 2*5 + 3*4 = 8
    assert orbit_dimension(g, [1, 2, 3, 4, 5, 6, 0, 0, 0, 0]) == 4


def test_auto_method():
    assert polarize(HEIS, [1, 0, 0]).method is Method.refined
    assert polarize(catalog.get("abelian4").algebra, [1, 0, 0, 0]).method is Method.basic
    with pytest.raises(ValueError):
        polarize(HEIS, [1, 0, 0], "nope")


# -- properties --------------------------------------------------------------


@settings(max_examples=60)
@given(st.randoms(use_true_random=False), st.data())
def test_basic_matches_definition_oracle(rnd, data):
    g = random_algebra(rnd)
    ell = data.draw(functionals(g.n))
    assert polarize_basic(g, ell).p_basis == vergne_oracle(g, ell)


@settings(max_examples=80)
@given(st.randoms(use_true_random=False), st.data())
def test_basic_equals_refined(rnd, data):
    g = random_algebra(rnd)
    ell = data.draw(functionals(g.n))
    b, r = polarize_basic(g, ell), polarize_refined(g, ell)
    assert b.p_basis == r.p_basis
    assert b.orbit_dim == r.orbit_dim


@settings(max_examples=60)
@given(st.randoms(use_true_random=False), st.data())
def test_polarization_conditions(rnd, data):
    g = random_algebra(rnd)
    ell = data.draw(functionals(g.n))
    res = polarize_basic(g, ell)
    assert res.orbit_dim % 2 == 0
    assert res.p_basis.dim == g.n - res.orbit_dim // 2
    assert verify_polarization(g, ell, res.p_basis).ok


@settings(max_examples=40)
@given(st.randoms(use_true_random=False), st.data(), nonzero_rationals)
def test_scaling_invariance(rnd, data, t):
    g = random_algebra(rnd)
    ell = data.draw(functionals(g.n))
    scaled = [t * x for x in ell]
    assert polarize_basic(g, scaled).p_basis == polarize_basic(g, ell).p_basis
    assert polarize_refined(g, scaled).p_basis == polarize_refined(g, ell).p_basis


def test_monotone_trace_and_skip_soundness():
    rng = random.Random(11)
    for _ in range(60):
        g = random_algebra(rng)
        ell = random_functional(rng, g.n)
        M = build_M(g, ell)
        dz = g.center_dim
        for j in range(1, min(dz + 1, g.n) + 1):
            assert nullspace(leading_submatrix(M, j)).dim == j
        for s in index_set_I(g, ell, M):
            assert s % 2 == 0
            null = nullspace(leading_submatrix(M, dz + s))
            assert null == Subspace.coordinate(dz + s, range(dz))


def test_index_set_members_full_rank():
    rng = random.Random(3)
    for _ in range(40):
        g = random_algebra(rng)
        ell = random_functional(rng, g.n)
        dz = g.center_dim
        I = index_set_I(g, ell)
        for s in range(2, g.n - dz + 1):
            assert (s in I) == (rank(m_zero(g, ell, dz + s)) == s)


def test_non_generic_heisenberg_plus_line():
    g = catalog.get("heisenberg_plus_line").algebra
    assert g.center_dim == 2
    for ell in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [2, 5, -1, 3]):
        b, r = polarize_basic(g, ell), polarize_refined(g, ell)
        assert b.p_basis == r.p_basis
        assert verify_polarization(g, ell, b.p_basis).ok


def test_filiform_example_by_hand():
    g = make_algebra(4, [(4, 3, {2: 1}), (4, 2, {1: 1})])
    # ell = Z1*: M has ell[Z4,Z2] = 1 only -> r(ell_4) = span{Z1, Z3}; sum with g_2 gives span{Z1,Z2,Z3}
    p = polarize_basic(g, [1, 0, 0, 0]).p_basis
    assert p == Subspace.coordinate(4, [0, 1, 2])
