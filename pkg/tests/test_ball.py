import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from simplexcube.ball import (
    Ball,
    alpha_ball,
    alpha_ball_formulas,
    ball_report,
    circumradius,
    d_n,
    d_n_series,
    incenter_inradius,
    min_enclosing_ball,
    min_enclosing_ball_bruteforce,
    projector_norm_ball,
    projector_norm_ball_sampled,
    psi_norm,
    regular_simplex,
    xi_ball,
)
from simplexcube.cube import alpha_cube_prime
from simplexcube.errors import DegenerateSimplex, DimensionTooLarge
from simplexcube.simplex import build_simplex, lagrange_eval


def random_simplex(rng, n, scale=1.0):
    while True:
        try:
            return build_simplex((scale * rng.standard_normal((n + 1, n))).tolist())
        except DegenerateSimplex:
            continue


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_four_alpha_formulas(seed, n):
    S = random_simplex(np.random.default_rng(seed), n)
    assert alpha_ball_formulas(S).agree()


def test_segment():
    S = build_simplex([[-0.5], [0.5]])
    assert alpha_ball(S) == 2.0
    assert xi_ball(S) == 2.0


@pytest.mark.parametrize("n", range(1, 11))
def test_regular_simplex(n):
    S = regular_simplex(n)
    V = np.array(S.vertices)
    assert np.allclose(np.linalg.norm(V, axis=1), 1, atol=1e-12)
    d2 = [np.sum((a - b) ** 2) for a, b in itertools.combinations(V, 2)]
    assert np.allclose(d2, 2 * (n + 1) / n, rtol=1e-12)
    assert np.allclose(V.mean(axis=0), 0, atol=1e-12)
    assert math.isclose(alpha_ball(S), n, rel_tol=1e-9)
    assert math.isclose(xi_ball(S), n, rel_tol=1e-9)
    z, r, _ = incenter_inradius(S)
    assert math.isclose(r, 1 / n, rel_tol=1e-9)
    assert np.allclose(z, 0, atol=1e-9)
    assert math.isclose(circumradius(S), 1, rel_tol=1e-9)


def test_regular_simplex_off_center():
    B = Ball((1.0, -2.0, 0.5), 3.0)
    S = regular_simplex(3, B)
    V = np.array(S.vertices)
    assert np.allclose(V.mean(axis=0), B.center)
    assert np.allclose(np.linalg.norm(V - B.center, axis=1), 3.0)
    assert math.isclose(xi_ball(S, B), 3, rel_tol=1e-9)


def test_unit_triangle_inradius():
    _, r, _ = incenter_inradius(build_simplex([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))
    # area / semiperimeter
    assert math.isclose(r, 0.5 / ((2 + math.sqrt(2)) / 2), rel_tol=1e-12)
    assert math.isclose(r, 1 / (2 + math.sqrt(2)), rel_tol=1e-12)


@given(st.integers(0, 10_000), st.integers(1, 5))
def test_tangent_points_on_faces(seed, n):
    S = random_simplex(np.random.default_rng(seed), n)
    _, _, tangents = incenter_inradius(S)
    for k, y in enumerate(tangents):
        assert abs(lagrange_eval(S, k, y)) < 1e-9


def test_obtuse_triangle_circumradius():
    assert math.isclose(circumradius(build_simplex([[0.0, 0.0], [4.0, 0.0], [1.0, 0.1]])), 2.0)
    assert min_enclosing_ball([(0, 0), (4, 0), (1, 0.1)])[0] == (2.0, 0.0)


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_welzl_matches_subset_enumeration(seed, n):
    S = random_simplex(np.random.default_rng(seed), n)
    assert math.isclose(circumradius(S), min_enclosing_ball_bruteforce(S.vertices), rel_tol=1e-9)


@given(st.integers(0, 10_000), st.integers(2, 5))
def test_euler_inequality(seed, n):
    S = random_simplex(np.random.default_rng(seed), n)
    rep = ball_report(S)
    assert rep.euler_ratio >= 1 - 1e-12
    assert math.isclose(rep.alpha * rep.inradius, 1, rel_tol=1e-9)


def test_euler_equality_only_for_regular():
    rng = np.random.default_rng(5)
    for n in range(2, 7):
        S = regular_simplex(n)
        rep = ball_report(S)
        assert abs(rep.circumradius - n * rep.inradius) < 1e-9
        V = np.array(S.vertices) + 1e-3 * rng.standard_normal((n + 1, n))
        rep = ball_report(build_simplex(V.tolist()))
        assert rep.circumradius - n * rep.inradius > 1e-9


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_xi_at_least_alpha(seed, n):
    rng = np.random.default_rng(seed)
    S = random_simplex(rng, n)
    B = Ball(tuple(rng.standard_normal(n)), float(rng.uniform(0.1, 2)))
    assert xi_ball(S, B) >= alpha_ball(S, B) - 1e-9


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_inscribed_simplex_bounds(seed, n):
    rng = np.random.default_rng(seed)
    V = rng.standard_normal((n + 1, n))
    V /= np.maximum(1.0, np.linalg.norm(V, axis=1))[:, None]
    try:
        S = build_simplex(V.tolist())
    except DegenerateSimplex:
        return
    assert alpha_ball(S) >= n - 1e-9
    assert xi_ball(S) >= n - 1e-9


@given(st.integers(1, 4).flatmap(lambda n: st.lists(
    st.lists(st.integers(0, 6).map(lambda k: Fraction(k, 6)), min_size=n, max_size=n),
    min_size=n + 1, max_size=n + 1)))
def test_ball_alpha_below_cube_alpha(verts):
    # [-1,1]^n contains B_n, so alpha over the ball never exceeds alpha over [-1,1]^n
    try:
        S = build_simplex(verts)
    except DegenerateSimplex:
        return
    assert alpha_ball(S) <= float(alpha_cube_prime(S)) * (1 + 1e-12)


@pytest.mark.parametrize("n", range(1, 13))
def test_psi_norm_equals_regular_simplex_norm(n):
    norm, f = projector_norm_ball(regular_simplex(n))
    assert math.isclose(norm, psi_norm(n).norm, rel_tol=1e-9)
    assert len(f) == n + 1 and f[-1] == 1


def test_psi_norm_values():
    assert psi_norm(1).exact == 1
    assert psi_norm(2).exact == Fraction(5, 3)
    assert psi_norm(3).exact == 2 and psi_norm(3).a == 1
    assert psi_norm(4).exact == Fraction(11, 5)
    assert psi_norm(8).exact == 3


def test_d_n_zeros():
    zeros = [n for n, d in d_n_series(300) if d == 0]
    assert zeros == [m * m - 1 for m in range(2, 18) if m * m - 1 <= 300]
    assert d_n(15) == 0 and d_n(24) == 0
    assert d_n(5) > 0 and math.isclose(d_n(5), math.sqrt(6) - psi_norm(5).norm)


def test_norm_sampling_oracle():
    rng = np.random.default_rng(11)
    for n in (2, 3, 4):
        S = random_simplex(rng, n, 0.5)
        B = Ball((0.0,) * n, 1.0)
        norm, _ = projector_norm_ball(S, B)
        assert projector_norm_ball_sampled(S, B, samples=100_000, seed=1) <= norm + 1e-6


def test_norm_ball_segment():
    norm, _ = projector_norm_ball(build_simplex([[-1.0], [1.0]]))
    assert norm == 1.0


def test_norm_ball_cap():
    with pytest.raises(DimensionTooLarge):
        projector_norm_ball(regular_simplex(5), max_dim=4)
