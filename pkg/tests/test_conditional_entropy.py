"""Measured-conditional entropy F, its closed forms, and its derivatives."""
import math

import numpy as np
import pytest
from hypothesis import given, settings

import xdiscord as xd
from xdiscord.conditional_entropy import (
    MeasurementAngles,
    c_phi,
    c_theta,
    closed_form_F0,
    closed_form_Fx,
    conditional_F,
    conditional_entropy,
    f_terms,
    outcome_probabilities,
)
from xdiscord.errors import DegenerateLimit

from conftest import (
    BELL,
    MAP_F0,
    MAXIMALLY_MIXED,
    SE_LINE_DIAGONALS,
    angles,
    random_state,
    x_states,
)
from reference import central_difference, dense_F

HALF_PI = math.pi / 2


def test_measurement_angles_domain():
    MeasurementAngles(0.0)
    MeasurementAngles(HALF_PI, 0.0)
    with pytest.raises(ValueError):
        MeasurementAngles(-0.1)
    with pytest.raises(ValueError):
        MeasurementAngles(HALF_PI + 0.1)
    with pytest.raises(ValueError):
        MeasurementAngles(0.3, math.pi)


def test_outcome_probabilities():
    skew = xd.make_state(0.5, 0.3, 0.1, 0.1)  # a2 = 0.6
    assert outcome_probabilities(skew, HALF_PI) == pytest.approx((0.5, 0.5), abs=1e-15)
    assert outcome_probabilities(skew, 0.0) == pytest.approx((0.8, 0.2), abs=1e-15)
    degenerate = xd.make_state(0.6, 0.4, 0.0, 0.0)  # a2 = 1
    assert outcome_probabilities(degenerate, 0.0) == pytest.approx((1.0, 0.0), abs=1e-15)


def test_f_terms_b2():
    s = xd.make_state(0.4, 0.3, 0.2, 0.1)
    assert f_terms(s, MeasurementAngles(0.7, 0.9)).b2 == 0.0
    s = xd.make_state(0.4, 0.3, 0.2, 0.1, 0.1, 0.1)
    assert f_terms(s, MeasurementAngles(0.7, HALF_PI)).b2 == pytest.approx(0.0, abs=1e-15)
    s = xd.make_state(0.4, 0.3, 0.2, 0.1, 0.05, 0.03)
    assert f_terms(s, MeasurementAngles(0.7, 0.0)).b2 == pytest.approx(0.0064, abs=1e-15)


def test_f_terms_invariants_random():
    rng = np.random.default_rng(3)
    for _ in range(100):
        s = random_state(rng)
        t = f_terms(s, MeasurementAngles(rng.uniform(0, HALF_PI), rng.uniform(0, math.pi)))
        assert t.p_plus + t.p_minus == pytest.approx(1.0, abs=1e-14)
        assert -1e-14 <= t.r_plus <= t.p_plus + 1e-14
        assert -1e-14 <= t.r_minus <= t.p_minus + 1e-14
        assert t.b2 >= (s.w - s.z) ** 2 - 1e-14
        for term in (t.t_plus, t.t_minus, t.q_plus, t.q_minus):
            assert term <= 1e-14


def test_F_bell_and_mixed():
    bell = xd.make_state(*BELL)
    mixed = xd.make_state(*MAXIMALLY_MIXED)
    for theta in (0.0, 0.3, 1.1, HALF_PI):
        for phi in (0.0, 0.8, 2.0):
            assert conditional_entropy(bell, theta, phi) == pytest.approx(0.0, abs=1e-12)
            assert conditional_entropy(mixed, theta, phi) == pytest.approx(1.0, abs=1e-12)


def test_F_matches_dense_projection_spot():
    s = xd.make_state(*SE_LINE_DIAGONALS, 0.05, 0.03)
    assert conditional_F(s, MeasurementAngles(0.3, 0.0)) == pytest.approx(
        dense_F(s, 0.3, 0.0), abs=1e-13)


def test_F_matches_dense_projection_random():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(300):
        s = random_state(rng)
        theta, phi = rng.uniform(0, HALF_PI), rng.uniform(0, math.pi)
        worst = max(worst, abs(conditional_entropy(s, theta, phi) - dense_F(s, theta, phi)))
    assert worst <= 1e-12


def test_scalar_and_array_paths_agree():
    rng = np.random.default_rng(13)
    s = random_state(rng)
    thetas = np.linspace(0.0, HALF_PI, 37)
    phis = np.linspace(0.0, math.pi, 11, endpoint=False)
    grid = conditional_entropy(s, thetas[:, None], phis[None, :])
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            assert grid[i, j] == pytest.approx(
                conditional_entropy(s, float(theta), float(phi)), abs=5e-16)


def test_closed_form_F0():
    assert closed_form_F0(xd.make_state(*MAXIMALLY_MIXED)) == 1.0
    assert closed_form_F0(xd.make_state(0.5, 0.3, 0.1, 0.1)) == pytest.approx(
        MAP_F0, abs=1e-15)
    assert closed_form_F0(xd.make_state(0.5, 0.0, 0.0, 0.5)) == 0.0


def test_closed_form_Fx():
    assert closed_form_Fx(xd.make_state(*BELL)) == pytest.approx(0.0, abs=1e-12)
    # w = z = 0 and a3 = 0: binary entropy at 1/2
    assert closed_form_Fx(xd.make_state(0.3, 0.2, 0.2, 0.3)) == 1.0
    s = xd.make_state(*SE_LINE_DIAGONALS, 0.05, 0.07)
    a3 = 0.0783 - 0.125 + 0.1 - 0.6967
    hi = (1 + math.sqrt(a3 ** 2 + 4 * 0.12 ** 2)) / 2
    expected = -(hi * math.log2(hi) + (1 - hi) * math.log2(1 - hi))
    assert closed_form_Fx(s) == pytest.approx(expected, abs=1e-14)


def test_closed_forms_match_F_at_their_angles():
    rng = np.random.default_rng(17)
    for _ in range(200):
        s = random_state(rng)
        assert closed_form_F0(s) == pytest.approx(
            conditional_entropy(s, 0.0, 0.0), abs=1e-12)
        assert closed_form_F0(s) == pytest.approx(
            conditional_entropy(s, 0.0, 1.1), abs=1e-12)
        assert closed_form_Fx(s) == pytest.approx(
            conditional_entropy(s, HALF_PI, 0.0), abs=1e-12)


def test_symmetry_extended_domain():
    rng = np.random.default_rng(19)
    for _ in range(300):
        s = random_state(rng)
        theta, phi = rng.uniform(0, HALF_PI), rng.uniform(0, math.pi)
        f = conditional_entropy(s, theta, phi)
        assert conditional_entropy(s, math.pi - theta, phi) == pytest.approx(f, abs=1e-12)
        assert conditional_entropy(s, theta, 2 * math.pi - phi) == pytest.approx(f, abs=1e-12)


def test_phi_independence_when_wz_zero():
    rng = np.random.default_rng(23)
    for _ in range(50):
        a, b, c, d = rng.dirichlet(np.ones(4))
        s = xd.make_state(a, b, c, d, rng.uniform(0, math.sqrt(a * d)), 0.0)
        theta = rng.uniform(0, HALF_PI)
        values = conditional_entropy(s, theta, np.linspace(0, math.pi, 25, endpoint=False))
        assert np.ptp(values) <= 1e-12


def test_phi_zero_is_the_grid_minimum():
    rng = np.random.default_rng(29)
    thetas = np.linspace(0.0, HALF_PI, 61)
    phis = np.linspace(0.0, math.pi, 41, endpoint=False)
    for _ in range(25):
        s = random_state(rng)
        grid = conditional_entropy(s, thetas[:, None], phis[None, :])
        assert grid.min() >= grid[:, 0].min() - 1e-12


def test_c_theta_vanishes_at_half_pi():
    rng = np.random.default_rng(31)
    for _ in range(100):
        s = random_state(rng)
        try:
            assert abs(c_theta(s, HALF_PI)) <= 1e-12
        except DegenerateLimit:
            pass


def test_c_theta_matches_finite_difference():
    rng = np.random.default_rng(37)
    checked = 0
    while checked < 200:
        s = random_state(rng)
        theta = rng.uniform(0.01, HALF_PI - 0.01)
        try:
            analytic = -math.sin(theta) / 4.0 * c_theta(s, theta)
        except DegenerateLimit:
            continue
        fd = central_difference(lambda t: conditional_entropy(s, t, 0.0), theta, 1e-6)
        assert analytic == pytest.approx(fd, rel=1e-5, abs=1e-9)
        checked += 1


def test_c_theta_diagonal_state_small_theta():
    s = xd.make_state(0.5, 0.3, 0.1, 0.1)
    for theta in (0.05, 0.2, 0.6):
        analytic = -math.sin(theta) / 4.0 * c_theta(s, theta)
        fd = central_difference(lambda t: conditional_entropy(s, t, 0.0), theta, 1e-6)
        assert math.copysign(1, analytic) == math.copysign(1, fd)
        assert analytic == pytest.approx(fd, rel=1e-5, abs=1e-9)


def test_c_phi_positive_on_interior_states():
    rng = np.random.default_rng(41)
    checked = 0
    while checked < 200:
        s = random_state(rng)
        ang = MeasurementAngles(rng.uniform(0.05, HALF_PI), rng.uniform(0, math.pi))
        try:
            value = c_phi(s, ang)
        except DegenerateLimit:
            continue
        assert value > 0.0
        checked += 1


def test_c_phi_maximally_mixed_limit():
    # R -> 0 limit: each log-ratio term tends to 2/(p ln 2) = 4/ln 2
    value = c_phi(xd.make_state(*MAXIMALLY_MIXED), MeasurementAngles(HALF_PI))
    assert value == pytest.approx(8.0 / math.log(2.0), abs=1e-12)


def test_c_phi_matches_finite_difference():
    rng = np.random.default_rng(43)
    checked = 0
    while checked < 100:
        s = random_state(rng)
        theta = rng.uniform(0.1, HALF_PI)
        phi = rng.uniform(0.1, math.pi - 0.1)
        try:
            factor = c_phi(s, MeasurementAngles(theta, phi))
        except DegenerateLimit:
            continue
        analytic = s.w * s.z * math.sin(theta) ** 2 * math.sin(2 * phi) * factor
        fd = central_difference(lambda p: conditional_entropy(s, theta, p), phi, 1e-6)
        assert analytic == pytest.approx(fd, rel=1e-5, abs=1e-9)
        checked += 1


def test_degenerate_limits_raise():
    bell = xd.make_state(*BELL)
    with pytest.raises(DegenerateLimit):
        c_phi(bell, MeasurementAngles(0.4))
    with pytest.raises(DegenerateLimit):
        c_theta(bell, 0.4)


@settings(deadline=None)
@given(x_states(), angles())
def test_F_range(s, ang):
    theta, phi = ang
    assert 0.0 <= conditional_entropy(s, theta, phi) <= 1.0


@settings(deadline=None)
@given(x_states(), angles())
def test_F_symmetry_property(s, ang):
    theta, phi = ang
    f = conditional_entropy(s, theta, phi)
    assert conditional_entropy(s, math.pi - theta, phi) == pytest.approx(f, abs=1e-12)
    assert conditional_entropy(s, theta, 2 * math.pi - phi) == pytest.approx(f, abs=1e-12)
