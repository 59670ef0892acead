"""Shared samplers and frozen reference values for the test suite.

Values tagged "frozen" were produced once by the dense reference oracle
(tests/reference.py) or by the module under test cross-checked against
it, then pinned at full double precision to catch regressions.
"""
from __future__ import annotations

import math

import numpy as np
from hypothesis import strategies as st

from xdiscord import XState, make_state

# Diagonals whose w = 0.05 line in z crosses the interior-angle window:
# the class sequence along it is SZ, then SE on a narrow z-interval, then SX.
SE_LINE_DIAGONALS = (0.0783, 0.1250, 0.1, 0.6967)
SE_LINE_W = 0.05
SE_LINE_Z_MAX = math.sqrt(0.1250 * 0.1)

# Target values for the two criterion roots on that line, checked to 1e-5.
SE_LINE_Z0_TARGET = 0.0655096
SE_LINE_ZPLUS_TARGET = 0.0661362
# Solver output at tol 1e-10, frozen for regression checks.
SE_LINE_Z0 = 0.0655096393083144
SE_LINE_ZPLUS = 0.06613620993122463

# Diagonals used for the (w, z) region-map tests.
MAP_DIAGONALS = (0.5, 0.3, 0.1, 0.1)
MAP_W_MAX = math.sqrt(0.5 * 0.1)
MAP_Z_MAX = math.sqrt(0.3 * 0.1)
# Frozen criterion values of the diagonal-only state (w = z = 0).
MAP_F0 = 0.963547202339972
MAP_C0 = -0.09152747619835147
MAP_CPLUS = 0.00010239999999999997
# Where each criterion changes sign along the w = z diagonal (frozen).
MAP_DIAG_C0_CROSSING = 0.02513333977113866
MAP_DIAG_CPLUS_CROSSING = 0.025134026364086178
# Target endpoints for the ambiguous-measurement band on that diagonal,
# asserted by the acceptance gate.
CLAIMED_SQ_BAND = (0.0502681, 0.0540158)

# Frozen landmarks along the SE line (w = 0.05).
SE_LINE_POINTS = {
    0.03: {"class": "SZ", "c0": -0.26581347624165297, "cplus": 0.008337593501164038,
           "fmin": 0.6297066699291172, "discord": 0.024566487741323084},
    0.05: {"class": "SZ", "discord": 0.046194342301991154},
    0.09: {"class": "SX", "cplus": -0.007814550018555464,
           "discord": 0.11108731978801567},
    0.0658: {"class": "SE", "theta_e": 0.6688489707062961,
             "fmin": 0.6296525240132027, "discord": 0.07229726634222244},
}

# States where both criteria are negative and the true minimum sits at an
# endpoint; found by random search and verified against the dense oracle.
SQ_EXEMPLARS = [
    ((0.4626, 0.31, 0.2189, 0.0085, 0.0521, 0.1295),
     {"theta_opt": math.pi / 2, "fmin": 0.8004024823885647,
      "discord": 0.13213738313776946}),
    ((0.705, 0.2315, 0.0633, 0.0002, 0.0004, 0.0824),
     {"theta_opt": 0.0, "fmin": 0.7575232656766935,
      "discord": 0.08239266528803013}),
    ((0.3908, 0.1, 0.505, 0.0042, 0.0336, 0.1109),
     {"theta_opt": 0.0, "fmin": 0.3930767514113085,
      "discord": 0.09483713580384201}),
]

# Measurement on A vs on B for a state with no swap symmetry (frozen).
ASYMMETRIC_STATE = (0.3, 0.4, 0.1, 0.2, 0.1, 0.05)
ASYMMETRIC_D_BA = 0.01599538951778534
ASYMMETRIC_D_AB = 0.012853847199258528

BELL = (0.5, 0.0, 0.0, 0.5, 0.5, 0.0)
MAXIMALLY_MIXED = (0.25, 0.25, 0.25, 0.25, 0.0, 0.0)


def random_state(rng: np.random.Generator) -> XState:
    """Uniform diagonal simplex, then w and z uniform within positivity."""
    a, b, c, d = rng.dirichlet(np.ones(4))
    w = rng.uniform(0.0, math.sqrt(a * d))
    z = rng.uniform(0.0, math.sqrt(b * c))
    return make_state(a, b, c, d, w, z)


@st.composite
def x_states(draw, min_weight: float = 1e-3) -> XState:
    """Valid states with diagonals bounded away from zero.

    The floor keeps hypothesis off the measure-zero degenerate boundary,
    which has its own targeted tests.
    """
    weights = [draw(st.floats(min_weight, 1.0)) for _ in range(4)]
    total = sum(weights)
    a, b, c, d = (v / total for v in weights)
    w = draw(st.floats(0.0, 1.0)) * math.sqrt(a * d)
    z = draw(st.floats(0.0, 1.0)) * math.sqrt(b * c)
    return make_state(a, b, c, d, w, z)


@st.composite
def angles(draw) -> tuple[float, float]:
    theta = draw(st.floats(0.0, math.pi / 2))
    phi = draw(st.floats(0.0, math.pi, exclude_max=True))
    return theta, phi
