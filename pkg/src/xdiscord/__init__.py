"""Analytic quantum discord for two-qubit X-states.

The main entry points:

    make_state(a, b, c, d, w, z)   validated X-state
    quantum_discord(state)         discord, classical correlation, class
    classify(state)                criteria signs and optimal measurement
    oracle_discord(state)          brute-force cross-check
    XXZState / xxz_discord         closed-form symmetric-model branch
"""

from .classifier import (
    ClassifierReport,
    MeasurementClass,
    classify,
    compute_C0,
    compute_Cplus,
    min_conditional_entropy,
    solve_theta_e,
)
from .conditional_entropy import (
    MeasurementAngles,
    closed_form_F0,
    closed_form_Fx,
    conditional_F,
    conditional_entropy,
)
from .discord import DiscordResult, discord_AB, quantum_discord
from .errors import (
    DegenerateLimit,
    InternalConsistencyError,
    InvalidState,
    RootNotFound,
)
from .oracle import OracleConfig, grid_minimize, oracle_discord
from .scan import (
    RegionMapSpec,
    ScanRecord,
    SweepSpec,
    records_to_csv,
    region_map,
    sweep_z,
    trace_boundary,
    xxz_region_map,
)
from .states import (
    XState,
    derived_constants,
    entropy_a,
    entropy_b,
    entropy_joint,
    from_dict,
    make_state,
    mutual_information,
    spectrum,
    swap_subsystems,
    to_dict,
)
from .xxz import XXZState, to_xstate, xxz_discord, xxz_min_F, xxz_region

__version__ = "0.1.0"

__all__ = [
    "ClassifierReport",
    "DegenerateLimit",
    "DiscordResult",
    "InternalConsistencyError",
    "InvalidState",
    "MeasurementAngles",
    "MeasurementClass",
    "OracleConfig",
    "RegionMapSpec",
    "RootNotFound",
    "ScanRecord",
    "SweepSpec",
    "XState",
    "XXZState",
    "classify",
    "closed_form_F0",
    "closed_form_Fx",
    "compute_C0",
    "compute_Cplus",
    "conditional_F",
    "conditional_entropy",
    "derived_constants",
    "discord_AB",
    "entropy_a",
    "entropy_b",
    "entropy_joint",
    "from_dict",
    "grid_minimize",
    "make_state",
    "min_conditional_entropy",
    "mutual_information",
    "oracle_discord",
    "quantum_discord",
    "records_to_csv",
    "region_map",
    "solve_theta_e",
    "spectrum",
    "swap_subsystems",
    "sweep_z",
    "to_dict",
    "to_xstate",
    "trace_boundary",
    "xxz_discord",
    "xxz_min_F",
    "xxz_region",
    "xxz_region_map",
]
