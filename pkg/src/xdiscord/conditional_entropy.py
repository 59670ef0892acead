"""Conditional entropy of qubit B after a projective measurement on qubit A.

The measurement direction is parametrized by polar angle theta and azimuth
phi.  For an X-state the post-measurement entropy F(theta, phi) has a closed
form built from the outcome probabilities p+- and the conditional Bloch radii
R+-; its angular derivatives factor as

    dF/dphi   = w z sin(theta)^2 sin(2 phi) * C_phi
    dF/dtheta = -(sin(theta)/4) * C_theta

which is what the measurement classifier consumes.  F is periodic and obeys
F(theta, phi) = F(pi - theta, phi) = F(theta, 2 pi - phi), so the search
domain is [0, pi/2] x [0, pi) with the azimuthal optimum pinned at phi = 0.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .errors import DegenerateLimit
from .states import LN2, XState, derived_constants

# Threshold below which p - R is treated as an exhausted logarithm.
PR_GAP_TOL = 1e-15
# Floor for denominators that a vanishing outcome probability would zero out.
TINY = 1e-300


@dataclass(frozen=True)
class MeasurementAngles:
    """Measurement direction restricted to the fundamental domain."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi / 2):
            raise ValueError(f"theta {self.theta!r} outside [0, pi/2]")
        if not (0.0 <= self.phi < math.pi):
            raise ValueError(f"phi {self.phi!r} outside [0, pi)")


@dataclass(frozen=True)
class FTerms:
    """Intermediate quantities of one conditional-entropy evaluation."""

    p_plus: float
    p_minus: float
    b2: float
    g_plus: float
    g_minus: float
    r_plus: float
    r_minus: float
    t_plus: float
    t_minus: float
    q_plus: float
    q_minus: float


def outcome_probabilities(state: XState, theta):
    """Measurement outcome probabilities (p+, p-); theta may be an array."""
    a2 = derived_constants(state).a2
    ct = np.cos(theta)
    pp = np.maximum(0.5 * (1.0 + a2 * ct), 0.0)
    pm = np.maximum(0.5 * (1.0 - a2 * ct), 0.0)
    return pp, pm


def _blocks(state, theta, phi):
    k = derived_constants(state)
    ct = np.cos(theta)
    st = np.sin(theta)
    pp = np.maximum(0.5 * (1.0 + k.a2 * ct), 0.0)
    pm = np.maximum(0.5 * (1.0 - k.a2 * ct), 0.0)
    b2 = state.w**2 + state.z**2 + 2.0 * state.w * state.z * np.cos(2.0 * phi)
    b2 = np.maximum(b2, 0.0)
    gp = 0.5 * (k.a3 + k.a1 * ct)
    gm = 0.5 * (k.a3 - k.a1 * ct)
    ss = st * st
    # R <= p holds exactly for physical states; enforce it against round-off
    # so that the entropy terms below never see a negative weight.
    rp = np.minimum(np.sqrt(gp * gp + b2 * ss), pp)
    rm = np.minimum(np.sqrt(gm * gm + b2 * ss), pm)
    return pp, pm, b2, gp, gm, rp, rm


def _entropy_pair(p, r):
    """The two weighted-log terms (p +- r) log2((p +- r) / (2p)), each <= 0."""
    denom = np.maximum(2.0 * p, TINY)
    hi = xlogy(p + r, (p + r) / denom) / LN2
    lo = xlogy(p - r, (p - r) / denom) / LN2
    return hi, lo


def _f_scalar(state, theta, phi):
    # math-module twin of the array path; worth having because minimizers and
    # root finders call F pointwise many thousands of times.
    k = derived_constants(state)
    ct = math.cos(theta)
    st = math.sin(theta)
    pp = max(0.5 * (1.0 + k.a2 * ct), 0.0)
    pm = max(0.5 * (1.0 - k.a2 * ct), 0.0)
    b2 = state.w**2 + state.z**2 + 2.0 * state.w * state.z * math.cos(2.0 * phi)
    b2 = max(b2, 0.0)
    gp = 0.5 * (k.a3 + k.a1 * ct)
    gm = 0.5 * (k.a3 - k.a1 * ct)
    ss = st * st
    rp = min(math.sqrt(gp * gp + b2 * ss), pp)
    rm = min(math.sqrt(gm * gm + b2 * ss), pm)
    total = 0.0
    for p, r in ((pp, rp), (pm, rm)):
        denom = max(2.0 * p, TINY)
        for v in (p + r, p - r):
            if v > 0.0:
                total += v * math.log(v / denom)
    return min(max(-0.5 * total / LN2, 0.0), 1.0)


def conditional_entropy(state: XState, theta, phi):
    """F(theta, phi) in bits; theta and phi may be broadcastable arrays.

    The result lies in [0, 1] for any valid state and any angles, including
    angles outside the fundamental domain.
    """
    if isinstance(theta, (int, float)) and isinstance(phi, (int, float)):
        return _f_scalar(state, float(theta), float(phi))
    pp, pm, _, _, _, rp, rm = _blocks(state, theta, phi)
    with np.errstate(divide="ignore", invalid="ignore"):
        tp, tm = _entropy_pair(pp, rp)
        qp, qm = _entropy_pair(pm, rm)
        f = -0.5 * (tp + tm + qp + qm)
    return np.clip(f, 0.0, 1.0)


def conditional_F(state: XState, angles: MeasurementAngles) -> float:
    return float(conditional_entropy(state, angles.theta, angles.phi))


def f_terms(state: XState, angles: MeasurementAngles) -> FTerms:
    """All intermediate terms of one evaluation, mainly for diagnostics."""
    pp, pm, b2, gp, gm, rp, rm = _blocks(state, angles.theta, angles.phi)
    with np.errstate(divide="ignore", invalid="ignore"):
        tp, tm = _entropy_pair(pp, rp)
        qp, qm = _entropy_pair(pm, rm)
    return FTerms(
        float(pp), float(pm), float(b2), float(gp), float(gm),
        float(rp), float(rm), float(tp), float(tm), float(qp), float(qm),
    )


def closed_form_F0(state: XState) -> float:
    """F at theta = 0 (measurement along z), directly from the diagonal."""
    ab = max(state.a + state.b, TINY)
    cd = max(state.c + state.d, TINY)
    total = (
        xlogy(state.a, state.a / ab)
        + xlogy(state.b, state.b / ab)
        + xlogy(state.c, state.c / cd)
        + xlogy(state.d, state.d / cd)
    )
    return float(min(max(-total / LN2, 0.0), 1.0))


def closed_form_Fx(state: XState) -> float:
    """F at theta = pi/2, phi = 0: the binary entropy of (1 + 2r)/2."""
    r = derived_constants(state).r
    hi = 0.5 + r
    lo = 0.5 - r
    return float(min(max(-(xlogy(hi, hi) + xlogy(lo, lo)) / LN2, 0.0), 1.0))


def _log_ratio_over_r(p, r):
    """log2((p+r)/(p-r)) / r with its r -> 0 limit 2/(p ln 2).

    Raises DegenerateLimit when p - r (or p itself) is too small for the
    logarithm to be trusted.
    """
    p = np.asarray(p, dtype=float)
    r = np.asarray(r, dtype=float)
    if np.any(p - r <= PR_GAP_TOL):
        raise DegenerateLimit("p - R below tolerance; conditional state is pure")
    small = r < 1e-8 * p
    safe_r = np.where(small, 1.0, r)
    with np.errstate(divide="ignore", invalid="ignore"):
        general = np.log1p(2.0 * r / (p - r)) / (safe_r * LN2)
    return np.where(small, 2.0 / (p * LN2), general)


def c_phi(state: XState, angles: MeasurementAngles) -> float:
    """Bracketed factor of dF/dphi.  Positive wherever it is defined, so F
    only grows as phi leaves 0: the optimal azimuth is always phi = 0."""
    pp, pm, _, _, _, rp, rm = _blocks(state, angles.theta, angles.phi)
    return float(_log_ratio_over_r(pm, rm) + _log_ratio_over_r(pp, rp))


def c_theta(state: XState, theta):
    """Bracketed factor of dF/dtheta at phi = 0; theta may be an array.

    Vanishes identically at theta = pi/2; an interior zero in (0, pi/2) is
    the stationary angle the classifier solves for.  Raises DegenerateLimit
    when a conditional state is numerically pure somewhere on the grid.
    """
    k = derived_constants(state)
    pp, pm, b2, gp, gm, rp, rm = _blocks(state, theta, 0.0)
    ct = np.cos(theta)
    lrp = _log_ratio_over_r(pp, rp)
    lrm = _log_ratio_over_r(pm, rm)
    if np.any(pp <= PR_GAP_TOL) or np.any(pm <= PR_GAP_TOL):
        raise DegenerateLimit("vanishing outcome probability")
    first = (k.a1 * gm + 2.0 * b2 * ct) * lrm
    second = (k.a1 * gp - 2.0 * b2 * ct) * lrp
    third = k.a2 * (
        2.0 * np.log2(pp)
        + np.log2(pm - rm)
        + np.log2(pm + rm)
        - 2.0 * np.log2(pm)
        - np.log2(pp - rp)
        - np.log2(pp + rp)
    )
    out = first - second + third
    return float(out) if np.ndim(out) == 0 else out
