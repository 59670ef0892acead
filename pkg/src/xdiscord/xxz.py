"""Closed-form discord for spin-flip-symmetric X-states.

These have diagonal (a, 1/2 - a, 1/2 - a, a), the shape of a two-site
reduced density matrix of an XXZ-type spin chain.  The one-qubit averages
vanish (a2 = a3 = 0, a1 = 4a - 1), which collapses the measurement
classification to a single comparison: the minimum of F is

    F(0, 0)    = -2a log2(2a) - (1 - 2a) log2(1 - 2a)    for w + z <= |2a - 1/2|
    F(pi/2, 0) = H2((1 + 2(w + z)) / 2)                  for w + z >= |2a - 1/2|

with both formulas agreeing on the dividing line, where F does not depend
on the measurement angle at all.  The interior classes never occur here.
"""

import math
from dataclasses import dataclass

from scipy.special import xlogy

from .classifier import MeasurementClass
from .discord import DiscordResult, clamp_small_negative
from .errors import InvalidState
from .states import (
    LN2,
    XState,
    entropy_a,
    entropy_b,
    entropy_joint,
    make_state,
)

# |w + z - |2a - 1/2|| at or below this counts as on the dividing line.
BOUNDARY_TOL = 1e-12
EDGE_TOL = 1e-12


@dataclass(frozen=True)
class XXZState:
    a: float
    w: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if not (-EDGE_TOL <= self.a <= 0.5 + EDGE_TOL):
            raise InvalidState(f"a = {self.a!r} outside [0, 1/2]")
        if self.w < -EDGE_TOL or self.z < -EDGE_TOL:
            raise InvalidState("coherences must be non-negative")
        if self.w > self.a + EDGE_TOL:
            raise InvalidState(f"w = {self.w!r} exceeds positivity bound a = {self.a!r}")
        if self.z > 0.5 - self.a + EDGE_TOL:
            raise InvalidState(
                f"z = {self.z!r} exceeds positivity bound 1/2 - a = {0.5 - self.a!r}"
            )


def to_xstate(xxz: XXZState) -> XState:
    half = 0.5 - xxz.a
    return make_state(xxz.a, half, half, xxz.a, xxz.w, xxz.z)


def _h2(p: float) -> float:
    return float(-(xlogy(p, p) + xlogy(1.0 - p, 1.0 - p)) / LN2)


def xxz_min_F(xxz: XXZState):
    """(Fmin, branch) from the w + z vs |2a - 1/2| comparison."""
    s = xxz.w + xxz.z
    threshold = abs(2.0 * xxz.a - 0.5)
    f_zero = _h2(2.0 * xxz.a)
    if abs(s - threshold) <= BOUNDARY_TOL:
        return f_zero, MeasurementClass.ANY
    if s < threshold:
        return f_zero, MeasurementClass.SIGMA_Z
    return _h2(0.5 + s), MeasurementClass.SIGMA_X


def xxz_region(xxz: XXZState):
    """(branch, on_boundary) for region maps; same comparison as xxz_min_F."""
    s = xxz.w + xxz.z
    threshold = abs(2.0 * xxz.a - 0.5)
    on_boundary = abs(s - threshold) <= BOUNDARY_TOL
    _, branch = xxz_min_F(xxz)
    return branch, on_boundary


def xxz_discord(xxz: XXZState) -> DiscordResult:
    """Discord through the closed-form branch instead of classification."""
    state = to_xstate(xxz)
    fmin, branch = xxz_min_F(xxz)
    theta = math.pi / 2 if branch is MeasurementClass.SIGMA_X else 0.0
    s_ab = entropy_joint(state)
    s_a = entropy_a(state)
    s_b = entropy_b(state)
    return DiscordResult(
        discord=clamp_small_negative(fmin - s_ab + s_a, "discord"),
        classical_correlation=clamp_small_negative(s_b - fmin, "classical correlation"),
        mutual_information=clamp_small_negative(s_a + s_b - s_ab, "mutual information"),
        fmin=fmin,
        tag=branch,
        theta_opt=theta,
        phi_opt=0.0,
        c0=math.nan,
        cplus=math.nan,
        used_fallback=False,
    )
