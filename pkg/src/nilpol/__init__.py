"""Exact computation of Vergne polarizing subalgebras of nilpotent Lie algebras."""

from .errors import *  # noqa: F401,F403
from .free_step2 import (
    FreeStep2Layout,
    build_free_step2,
    l1_null_vector,
    m0_generator_block,
    polarize_free,
    v_vector,
    w_vector,
    zariski_check,
)
from .lie import Functional, LieAlgebra, bracket, center, evaluate, make_algebra
from .linalg import RatMatrix, Subspace, inverse, nullspace, rank, rref, subspace_equal, subspace_sum
from .verify import VerificationReport, is_subordinated, verify_polarization
from .vergne import (
    IndexSetI,
    PolarizationResult,
    build_M,
    index_set_I,
    leading_submatrix,
    m_zero,
    orbit_dimension,
    polarize,
    polarize_basic,
    polarize_refined,
)

__version__ = "0.1.0"
