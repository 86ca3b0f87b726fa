"""Simplices inscribed in cubes and balls: absorption indices, axial
diameters, interpolation projector norms and related extremal quantities."""

from .ball import (
    Ball,
    BallReport,
    alpha_ball,
    ball_report,
    circumradius,
    d_n_series,
    incenter_inradius,
    projector_norm_ball,
    psi_norm,
    regular_simplex,
    xi_ball,
)
from .cube import (
    AbsorptionReport,
    CubeNormReport,
    alpha_cube,
    axial_diameters,
    check_bilateral,
    projector_norm_cube,
    xi_cube,
)
from .exact import RationalMatrix, parse_rational
from .families import (
    catalog,
    cut_volumes,
    family_v,
    halfspace_cube_volume,
    is_perfect,
    s_star,
    search_01,
    v_closed_form,
)
from .hadamard import h_search, hadamard, hadamard_simplex, maxdet_diagnostic
from .legendre import legendre_eval, legendre_inv, slice_measure, theta_lower_ball, theta_lower_cube
from .simplex import Simplex, build_simplex, parse_simplex

__version__ = "0.1.0"
