"""Quantum discord and classical correlation for two-qubit X-states.

Measuring subsystem A with the optimal projector splits the total
correlation I(A:B) into a classically extractable part J(B|A) and the
discord D(B|A):

    J(B|A) = S(rho_B) - min_F        D(B|A) = min_F - S(rho_AB) + S(rho_A)

where min_F is the classified conditional-entropy minimum.  Both are in
bits and non-negative up to round-off.
"""

from dataclasses import dataclass

from .classifier import ClassifierReport, MeasurementClass, classify
from .errors import InternalConsistencyError
from .states import XState, entropy_a, entropy_b, entropy_joint, swap_subsystems

# Negative values past round-off scale mean a wrong branch was chosen
# somewhere; clamping them would hide the bug.
ROUNDOFF_CLAMP = 1e-12


@dataclass(frozen=True)
class DiscordResult:
    discord: float
    classical_correlation: float
    mutual_information: float
    fmin: float
    tag: MeasurementClass
    theta_opt: float
    phi_opt: float
    c0: float
    cplus: float
    used_fallback: bool


def clamp_small_negative(value: float, label: str) -> float:
    if value >= 0.0:
        return value
    if value >= -ROUNDOFF_CLAMP:
        return 0.0
    raise InternalConsistencyError(f"{label} = {value!r} is negative beyond round-off")


def _assemble(state: XState, report: ClassifierReport) -> DiscordResult:
    s_ab = entropy_joint(state)
    s_a = entropy_a(state)
    s_b = entropy_b(state)
    discord = clamp_small_negative(report.fmin - s_ab + s_a, "discord")
    classical = clamp_small_negative(s_b - report.fmin, "classical correlation")
    mutual = clamp_small_negative(s_a + s_b - s_ab, "mutual information")
    return DiscordResult(
        discord=discord,
        classical_correlation=classical,
        mutual_information=mutual,
        fmin=report.fmin,
        tag=report.tag,
        theta_opt=report.theta_opt,
        phi_opt=0.0,
        c0=report.c0,
        cplus=report.cplus,
        used_fallback=report.used_fallback,
    )


def quantum_discord(state: XState) -> DiscordResult:
    """Discord D(B|A) with the measurement on subsystem A."""
    return _assemble(state, classify(state))


def discord_AB(state: XState) -> DiscordResult:
    """Discord D(A|B): measurement on B, computed on the swapped state."""
    return quantum_discord(swap_subsystems(state))
