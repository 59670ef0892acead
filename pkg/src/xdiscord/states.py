"""X-state density matrices: validation, derived constants, spectra, entropies.

An X-state keeps the six real parameters of the density matrix

    [[a, 0, 0, w],
     [0, b, z, 0],
     [0, z, c, 0],
     [w, 0, 0, d]]

written in the computational basis |00>, |01>, |10>, |11>.  The diagonal is a
probability vector and the coherences obey w <= sqrt(a*d), z <= sqrt(b*c).
Complex coherences are reduced to their moduli on input; the phases can be
removed by local unitaries, so no correlation measure depends on them.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .errors import InvalidState

LN2 = math.log(2.0)

# Largest tolerated deviation of a+b+c+d from 1 before the input is rejected;
# anything smaller is renormalized away.
TRACE_TOL = 1e-9
# Slack on diagonal nonnegativity and on the coherence bounds.
DIAG_TOL = 1e-12
COHERENCE_TOL = 1e-12


@dataclass(frozen=True)
class XState:
    """Validated X-state parameters.  Build instances through make_state."""

    a: float
    b: float
    c: float
    d: float
    w: float
    z: float


@dataclass(frozen=True)
class DerivedConstants:
    """Pauli-z expectations a1 = <s_z s_z>, a2 = <s_z x 1>, a3 = <1 x s_z>,
    and the composite radius r = sqrt(a3^2 + 4(w+z)^2)/2 <= 1/2."""

    a1: float
    a2: float
    a3: float
    r: float


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of the joint state and of both one-qubit marginals."""

    joint: tuple[float, float, float, float]
    reduced_a: tuple[float, float]
    reduced_b: tuple[float, float]


def make_state(a, b, c, d, w=0.0, z=0.0) -> XState:
    """Validate raw parameters and return an XState.

    The coherences may be complex; their moduli are stored.  The diagonal is
    clamped to [0, 1] and renormalized when the trace is within TRACE_TOL of
    one.  Raises InvalidState for non-finite input, negative diagonals, a bad
    trace, or coherences exceeding the positivity bounds.
    """
    w = complex(w)
    z = complex(z)
    diag = [a, b, c, d]
    values = diag + [w.real, w.imag, z.real, z.imag]
    if not all(math.isfinite(float(v)) for v in values):
        raise InvalidState("state parameters must be finite")
    w = abs(w)
    z = abs(z)
    if min(diag) < -DIAG_TOL:
        raise InvalidState(f"negative diagonal entry: {min(diag):.3e}")
    diag = [min(max(float(v), 0.0), 1.0) for v in diag]
    trace = sum(diag)
    if abs(trace - 1.0) > TRACE_TOL:
        raise InvalidState(f"trace deviates from 1 by {trace - 1.0:.3e}")
    a, b, c, d = (v / trace for v in diag)
    if w > math.sqrt(a * d) + COHERENCE_TOL:
        raise InvalidState(f"outer coherence {w:.6g} exceeds sqrt(a*d)")
    if z > math.sqrt(b * c) + COHERENCE_TOL:
        raise InvalidState(f"inner coherence {z:.6g} exceeds sqrt(b*c)")
    return XState(a, b, c, d, float(w), float(z))


def from_dict(data) -> XState:
    """Build a state from a mapping with keys a, b, c, d and optional
    w, z, w_im, z_im.  Unknown keys are ignored."""
    try:
        diag = [float(data[k]) for k in ("a", "b", "c", "d")]
    except KeyError as exc:
        raise InvalidState(f"missing state key {exc.args[0]!r}") from None
    w = complex(float(data.get("w", 0.0)), float(data.get("w_im", 0.0)))
    z = complex(float(data.get("z", 0.0)), float(data.get("z_im", 0.0)))
    return make_state(*diag, w, z)


def to_dict(state: XState) -> dict:
    return {
        "a": state.a,
        "b": state.b,
        "c": state.c,
        "d": state.d,
        "w": state.w,
        "z": state.z,
    }


def derived_constants(state: XState) -> DerivedConstants:
    a1 = state.a - state.b - state.c + state.d
    a2 = state.a + state.b - state.c - state.d
    a3 = state.a - state.b + state.c - state.d
    s = state.w + state.z
    # Round-off can push r marginally past the physical bound 1/2.
    r = min(0.5 * math.sqrt(a3 * a3 + 4.0 * s * s), 0.5)
    return DerivedConstants(a1, a2, a3, r)


def spectrum(state: XState) -> Spectrum:
    """Closed-form eigenvalues from the two 2x2 blocks of the X matrix."""
    outer = 0.5 * math.sqrt((state.a - state.d) ** 2 + 4.0 * state.w**2)
    inner = 0.5 * math.sqrt((state.b - state.c) ** 2 + 4.0 * state.z**2)
    half_ad = 0.5 * (state.a + state.d)
    half_bc = 0.5 * (state.b + state.c)
    joint = (half_ad + outer, half_ad - outer, half_bc + inner, half_bc - inner)
    reduced_a = (state.a + state.b, state.c + state.d)
    reduced_b = (state.a + state.c, state.b + state.d)
    return Spectrum(joint, reduced_a, reduced_b)


def shannon_entropy(values) -> float:
    """Base-2 Shannon entropy with the 0*log(0) = 0 convention.  Values are
    clamped to [0, 1] so that -1e-16-style round-off cannot produce NaN."""
    lam = np.clip(np.asarray(values, dtype=float), 0.0, 1.0)
    return float(-np.sum(xlogy(lam, lam)) / LN2)


def entropy_joint(state: XState) -> float:
    return shannon_entropy(spectrum(state).joint)


def entropy_a(state: XState) -> float:
    return shannon_entropy(spectrum(state).reduced_a)


def entropy_b(state: XState) -> float:
    return shannon_entropy(spectrum(state).reduced_b)


def mutual_information(state: XState) -> float:
    """I(A:B) = S(A) + S(B) - S(AB), in bits."""
    spec = spectrum(state)
    return (
        shannon_entropy(spec.reduced_a)
        + shannon_entropy(spec.reduced_b)
        - shannon_entropy(spec.joint)
    )


def swap_subsystems(state: XState) -> XState:
    """Exchange the two qubits: b and c trade places, w and z are fixed."""
    return XState(state.a, state.c, state.b, state.d, state.w, state.z)
