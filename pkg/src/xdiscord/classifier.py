"""Measurement classification for the conditional-entropy minimum.

The entropy F(theta, 0) is stationary at theta = 0 and theta = pi/2 for every
X-state, so the location of its minimum is decided by the signs of the two
second-derivative criteria

    C0  ~  d^2F/dtheta^2 at theta = 0      (up to a positive factor)
    C+  ~  d^2F/dtheta^2 at theta = pi/2   (up to a positive factor, negated)

evaluated in closed form below.  The sign table:

    C0 < 0, C+ > 0   ->  minimum at theta = 0        (SigmaZ)
    C0 > 0, C+ < 0   ->  minimum at theta = pi/2     (SigmaX)
    C0 > 0, C+ > 0   ->  interior root theta_e       (SigmaE)
    C0 < 0, C+ < 0   ->  both endpoints are local
                         minima; compare directly    (SigmaQ)
    either zero      ->  flat direction              (Any)

Zero diagonal entries make C0's logarithms singular; classification then
falls back to a direct scan of F rather than guessing limit signs.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import brentq, minimize_scalar
from scipy.special import xlogy

from .conditional_entropy import (
    c_theta,
    closed_form_F0,
    closed_form_Fx,
    conditional_entropy,
)
from .errors import DegenerateLimit, RootNotFound
from .states import LN2, XState, derived_constants

HALF_PI = math.pi / 2
# |C0| or |C+| at or below this counts as exactly zero (class Any).
EPSILON_ZERO = 1e-12
# Diagonal entries at or below this make C0's logs untrustworthy.
DIAG_FLOOR = 1e-14
# Relative gap under which the (1/(x-y)) log2(x/y) slope uses its limit.
SLOPE_LIMIT_TOL = 1e-10
# F(0,0) vs F(pi/2,0) ties inside the SigmaQ branch resolve to SigmaZ.
SQ_TIE_TOL = 1e-15

THETA_E_GRID = 512
THETA_E_EDGE = 1e-9
FALLBACK_GRID = 2001
FALLBACK_SNAP = 1e-6
FALLBACK_TIE = 1e-14


class MeasurementClass(Enum):
    """Which measurement minimizes F; values double as the CSV codes."""

    ANY = "ANY"
    SIGMA_Z = "SZ"
    SIGMA_X = "SX"
    SIGMA_E = "SE"
    SIGMA_Q = "SQ"


@dataclass(frozen=True)
class ClassifierReport:
    c0: float
    cplus: float
    tag: MeasurementClass
    theta_opt: float
    fmin: float
    used_fallback: bool = False


def _slope_log(x: float, y: float) -> float:
    # log2(x/y) / (x - y), extended continuously across x = y.
    if abs(x - y) <= SLOPE_LIMIT_TOL * max(x, y):
        return 1.0 / (x * LN2)
    return math.log2(x / y) / (x - y)


def compute_C0(state: XState) -> float:
    """Criterion at theta = 0.  Negative means theta = 0 is a local minimum."""
    a, b, c, d = state.a, state.b, state.c, state.d
    if min(a, b, c, d) <= DIAG_FLOOR:
        raise DegenerateLimit("diagonal entry too small for C0's logarithms")
    k = derived_constants(state)
    s2 = (state.w + state.z) ** 2
    ratio = (c * d * (1.0 + k.a2) ** 2) / (a * b * (1.0 - k.a2) ** 2)
    return (
        k.a2 * math.log2(ratio)
        - k.a1 * math.log2((a * d) / (b * c))
        + 2.0 * s2 * (_slope_log(a, b) + _slope_log(c, d))
    )


def compute_Cplus(state: XState) -> float:
    """Criterion at theta = pi/2.  Negative means pi/2 is a local minimum.

    The factor (1 - 4r^2) ln((1+2r)/(1-2r)) is continued by its limit 0 at
    r = 1/2, so the formula is finite for every valid state.
    """
    k = derived_constants(state)
    r = k.r
    s = state.w + state.z
    head = 4.0 * r * (k.a1 * k.a3 - 4.0 * k.a2 * r * r) ** 2
    t = max(1.0 - 2.0 * r, 0.0)
    bracket = (1.0 + 2.0 * r) * (t * math.log1p(2.0 * r) - float(xlogy(t, t)))
    return head - 4.0 * s * s * (4.0 * r * r - k.a1**2) * bracket


def solve_theta_e(state: XState, tol: float = 1e-12) -> float:
    """Interior root of C_theta in (0, pi/2).

    Brackets by scanning a fixed grid for a sign change, then polishes with
    Brent's method.  Raises RootNotFound when no sign change exists, which
    signals that the state is not actually in the SigmaE class.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    grid = np.linspace(THETA_E_EDGE, HALF_PI - THETA_E_EDGE, THETA_E_GRID)
    vals = np.asarray(c_theta(state, grid))
    zeros = np.flatnonzero(vals == 0.0)
    if zeros.size:
        return float(grid[zeros[0]])
    flips = np.flatnonzero(vals[:-1] * vals[1:] < 0.0)
    if flips.size == 0:
        raise RootNotFound("C_theta has no sign change in (0, pi/2)")
    i = int(flips[0])
    return float(
        brentq(lambda t: c_theta(state, t), grid[i], grid[i + 1], xtol=tol)
    )


def _fallback_scan(state: XState, c0: float, cplus: float) -> ClassifierReport:
    # Direct minimization of F(theta, 0); used when the closed-form criteria
    # are unavailable or contradict the root structure.
    thetas = np.linspace(0.0, HALF_PI, FALLBACK_GRID)
    f = np.asarray(conditional_entropy(state, thetas, 0.0))
    i = int(np.argmin(f))
    lo = thetas[max(i - 1, 0)]
    hi = thetas[min(i + 1, FALLBACK_GRID - 1)]
    res = minimize_scalar(
        lambda t: conditional_entropy(state, float(t), 0.0),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-10},
    )
    theta_star, f_star = float(res.x), float(res.fun)
    if float(f[i]) < f_star:
        theta_star, f_star = float(thetas[i]), float(f[i])
    # Ties go to the endpoints (theta = 0 first) so that states whose F is
    # flat, like pure ones, read as an endpoint class rather than interior.
    if float(f[0]) <= f_star + FALLBACK_TIE:
        theta_star, f_star = 0.0, float(f[0])
    elif float(f[-1]) <= f_star + FALLBACK_TIE:
        theta_star, f_star = HALF_PI, float(f[-1])
    if theta_star <= FALLBACK_SNAP:
        tag, theta_star = MeasurementClass.SIGMA_Z, 0.0
    elif theta_star >= HALF_PI - FALLBACK_SNAP:
        tag, theta_star = MeasurementClass.SIGMA_X, HALF_PI
    else:
        tag = MeasurementClass.SIGMA_E
    return ClassifierReport(c0, cplus, tag, theta_star, f_star, True)


def classify(state: XState, epsilon_zero: float = EPSILON_ZERO) -> ClassifierReport:
    """Name the minimizing measurement and its F value via the sign table."""
    if epsilon_zero <= 0.0:
        raise ValueError("epsilon_zero must be positive")
    cplus = compute_Cplus(state)
    try:
        c0 = compute_C0(state)
    except DegenerateLimit:
        return _fallback_scan(state, math.nan, cplus)
    if abs(c0) <= epsilon_zero or abs(cplus) <= epsilon_zero:
        return ClassifierReport(
            c0, cplus, MeasurementClass.ANY, 0.0, closed_form_F0(state)
        )
    if c0 < 0.0 < cplus:
        return ClassifierReport(
            c0, cplus, MeasurementClass.SIGMA_Z, 0.0, closed_form_F0(state)
        )
    if cplus < 0.0 < c0:
        return ClassifierReport(
            c0, cplus, MeasurementClass.SIGMA_X, HALF_PI, closed_form_Fx(state)
        )
    if c0 > 0.0 and cplus > 0.0:
        try:
            theta_e = solve_theta_e(state)
        except (RootNotFound, DegenerateLimit):
            return _fallback_scan(state, c0, cplus)
        fmin = float(conditional_entropy(state, theta_e, 0.0))
        return ClassifierReport(c0, cplus, MeasurementClass.SIGMA_E, theta_e, fmin)
    # Both criteria negative: each endpoint is a local minimum, so compare.
    f0 = closed_form_F0(state)
    fx = closed_form_Fx(state)
    if abs(f0 - fx) <= SQ_TIE_TOL:
        return ClassifierReport(c0, cplus, MeasurementClass.SIGMA_Z, 0.0, f0)
    if f0 < fx:
        return ClassifierReport(c0, cplus, MeasurementClass.SIGMA_Q, 0.0, f0)
    return ClassifierReport(c0, cplus, MeasurementClass.SIGMA_Q, HALF_PI, fx)


def min_conditional_entropy(state: XState):
    """(Fmin, class, theta_opt) with phi_opt pinned at 0 by symmetry."""
    report = classify(state)
    return report.fmin, report.tag, report.theta_opt
