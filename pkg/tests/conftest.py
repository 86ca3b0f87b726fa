import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from simplexcube.errors import DegenerateSimplex
from simplexcube.simplex import build_simplex

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LONG = os.environ.get("SIMPLEXCUBE_LONG") == "1"
long_only = pytest.mark.skipif(not LONG, reason="set SIMPLEXCUBE_LONG=1 for long runs")


def grid_coord(den: int = 6):
    return st.integers(0, den).map(lambda k: Fraction(k, den))


@st.composite
def cube_simplices(draw, n_min=1, n_max=4, den=6):
    """Nondegenerate simplices with rational vertices in [0, 1]^n."""
    n = draw(st.integers(n_min, n_max))
    verts = draw(st.lists(st.lists(grid_coord(den), min_size=n, max_size=n),
                          min_size=n + 1, max_size=n + 1))
    try:
        return build_simplex(verts)
    except DegenerateSimplex:
        from hypothesis import assume
        assume(False)


@st.composite
def rational_simplices(draw, n_min=1, n_max=4, lo=-5, hi=5):
    n = draw(st.integers(n_min, n_max))
    coord = st.fractions(min_value=lo, max_value=hi, max_denominator=7)
    verts = draw(st.lists(st.lists(coord, min_size=n, max_size=n), min_size=n + 1, max_size=n + 1))
    try:
        return build_simplex(verts)
    except DegenerateSimplex:
        from hypothesis import assume
        assume(False)
