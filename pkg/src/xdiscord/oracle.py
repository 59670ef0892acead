"""Brute-force minimization of the conditional entropy over measurement angles.

This is the validation route: it never looks at the criteria, derivatives,
or closed forms, only at F(theta, phi) values.  A dense grid over the
fundamental domain [0, pi/2] x [0, pi) locates the basin; golden-section
search (hand-rolled so the refinement shares no code with the analytic
solvers) polishes the angles.  The refined minimum never exceeds the best
grid value because the grid point stays in the candidate set.
"""

import math
from dataclasses import dataclass

import numpy as np

from .conditional_entropy import conditional_entropy
from .states import XState, entropy_a, entropy_joint

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
HALF_PI = math.pi / 2


@dataclass(frozen=True)
class OracleConfig:
    n_theta: int = 721
    n_phi: int = 181
    refine_tol: float = 1e-10
    refine_max_iter: int = 200

    def __post_init__(self):
        if self.n_theta < 3 or self.n_phi < 3:
            raise ValueError("grid must have at least 3 points per axis")
        if self.refine_tol <= 0.0:
            raise ValueError("refine_tol must be positive")
        if self.refine_max_iter < 1:
            raise ValueError("refine_max_iter must be at least 1")


def _golden_min(f, lo, hi, tol, max_iter):
    """Minimize a unimodal-ish f on [lo, hi]; returns the best probe seen."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
    xm = 0.5 * (lo + hi)
    fm = f(xm)
    fbest, xbest = min((f1, x1), (f2, x2), (fm, xm))
    return xbest, fbest


def grid_minimize(state: XState, config: OracleConfig = OracleConfig()):
    """(theta, phi, F) at the refined global minimum of F over the domain."""
    thetas = np.linspace(0.0, HALF_PI, config.n_theta)
    phis = np.linspace(0.0, math.pi, config.n_phi, endpoint=False)
    grid = np.asarray(conditional_entropy(state, thetas[:, None], phis[None, :]))
    i, j = np.unravel_index(int(np.argmin(grid)), grid.shape)
    best_t = float(thetas[i])
    best_p = float(phis[j])
    best_f = float(grid[i, j])

    dt = float(thetas[1] - thetas[0])
    t1, f1 = _golden_min(
        lambda t: conditional_entropy(state, t, best_p),
        max(best_t - dt, 0.0),
        min(best_t + dt, HALF_PI),
        config.refine_tol,
        config.refine_max_iter,
    )
    if f1 < best_f:
        best_t, best_f = t1, f1

    if state.w * state.z > 0.0:
        # Only the w z cos(2 phi) cross term moves with phi, so refinement
        # there is pointless unless both coherences are present.
        dp = float(phis[1] - phis[0])
        p1, f2 = _golden_min(
            lambda p: conditional_entropy(state, best_t, p),
            best_p - dp,
            best_p + dp,
            config.refine_tol,
            config.refine_max_iter,
        )
        if f2 < best_f:
            best_p, best_f = p1 % math.pi, f2
        t2, f3 = _golden_min(
            lambda t: conditional_entropy(state, t, best_p),
            max(best_t - dt, 0.0),
            min(best_t + dt, HALF_PI),
            config.refine_tol,
            config.refine_max_iter,
        )
        if f3 < best_f:
            best_t, best_f = t2, f3

    return best_t, best_p, best_f


def oracle_discord(state: XState, config: OracleConfig = OracleConfig()) -> float:
    """Discord with min F found by search instead of classification."""
    _, _, fmin = grid_minimize(state, config)
    return fmin - entropy_joint(state) + entropy_a(state)
