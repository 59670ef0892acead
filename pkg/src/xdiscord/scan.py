"""Grid scans over state parameters: region maps, sweeps, boundary traces.

Everything here is data-producing plumbing around the classifier and the
discord assembly.  Region maps walk a (w, z) rectangle row-major (w outer,
z inner) and classify pointwise; boundary curves are traced separately by
1-D root finding on C0 or C+ along a parametrized segment, which is sharper
than contouring the map.  Grid points that violate positivity are kept as
SKIP rows so the output stays rectangular.

CSV serialization uses 17 significant digits so binary64 values survive a
round trip, and a fixed row order so identical specs produce byte-identical
files regardless of worker count.
"""

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .classifier import compute_C0, compute_Cplus
from .discord import quantum_discord
from .errors import DegenerateLimit, InvalidState
from .oracle import OracleConfig, oracle_discord
from .states import make_state
from .xxz import XXZState, to_xstate, xxz_discord, xxz_region

NAN = math.nan
DEFAULT_RESOLUTION = 400
BOUNDARY_SAMPLES = 512


@dataclass(frozen=True)
class RegionMapSpec:
    """A (w, z) rectangle over fixed diagonals; ranges clipped to positivity."""

    a: float
    b: float
    c: float
    d: float
    w_range: tuple = None
    z_range: tuple = None
    n_w: int = DEFAULT_RESOLUTION
    n_z: int = DEFAULT_RESOLUTION

    def __post_init__(self):
        if self.n_w < 2 or self.n_z < 2:
            raise ValueError("resolution must be at least 2 per axis")
        probe = make_state(self.a, self.b, self.c, self.d)
        w_max = math.sqrt(probe.a * probe.d)
        z_max = math.sqrt(probe.b * probe.c)
        object.__setattr__(self, "w_range", _clip_range(self.w_range, w_max))
        object.__setattr__(self, "z_range", _clip_range(self.z_range, z_max))


@dataclass(frozen=True)
class SweepSpec:
    """A z-line at fixed w over fixed diagonals."""

    a: float
    b: float
    c: float
    d: float
    w: float
    z_range: tuple = None
    samples: int = DEFAULT_RESOLUTION

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError("samples must be at least 2")
        probe = make_state(self.a, self.b, self.c, self.d)
        z_max = math.sqrt(probe.b * probe.c)
        object.__setattr__(self, "z_range", _clip_range(self.z_range, z_max))


@dataclass(frozen=True)
class ScanRecord:
    w: float
    z: float
    code: str
    discord: float
    fmin: float
    theta_opt: float
    c0: float
    cplus: float
    a: float = NAN
    oracle_discord: float = NAN


def _clip_range(given, upper):
    lo, hi = (0.0, upper) if given is None else given
    lo = min(max(float(lo), 0.0), upper)
    hi = min(max(float(hi), lo), upper)
    return (lo, hi)


def _point_record(spec, w, z):
    try:
        state = make_state(spec.a, spec.b, spec.c, spec.d, w, z)
    except InvalidState:
        return ScanRecord(w, z, "SKIP", NAN, NAN, NAN, NAN, NAN)
    res = quantum_discord(state)
    return ScanRecord(
        w, z, res.tag.value, res.discord, res.fmin, res.theta_opt, res.c0, res.cplus
    )


def _region_row(args):
    spec, w = args
    z_values = np.linspace(*spec.z_range, spec.n_z)
    return [_point_record(spec, w, float(z)) for z in z_values]


def region_map(spec: RegionMapSpec, max_workers: int = None):
    """One ScanRecord per grid point, row-major in (w, z)."""
    w_values = [float(w) for w in np.linspace(*spec.w_range, spec.n_w)]
    jobs = [(spec, w) for w in w_values]
    if max_workers is not None and max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            rows = list(pool.map(_region_row, jobs, chunksize=4))
    else:
        rows = [_region_row(job) for job in jobs]
    return [record for row in rows for record in row]


def sweep_z(spec: SweepSpec, with_oracle: bool = False, oracle_config=None):
    """Records ordered by z at fixed w; optional brute-force column."""
    config = oracle_config or OracleConfig()
    records = []
    for z in np.linspace(*spec.z_range, spec.samples):
        rec = _point_record(spec, spec.w, float(z))
        if with_oracle and rec.code != "SKIP":
            state = make_state(spec.a, spec.b, spec.c, spec.d, spec.w, float(z))
            rec = ScanRecord(
                rec.w, rec.z, rec.code, rec.discord, rec.fmin, rec.theta_opt,
                rec.c0, rec.cplus, oracle_discord=oracle_discord(state, config),
            )
        records.append(rec)
    return records


def _xxz_point(a, z):
    try:
        xxz = XXZState(a, 0.0, z)
    except InvalidState:
        return ScanRecord(0.0, z, "SKIP", NAN, NAN, NAN, NAN, NAN, a=a)
    res = xxz_discord(xxz)
    branch, on_boundary = xxz_region(xxz)
    code = "BOUNDARY" if on_boundary else branch.value
    state = to_xstate(xxz)
    try:
        c0 = compute_C0(state)
    except DegenerateLimit:
        c0 = NAN
    cplus = compute_Cplus(state)
    return ScanRecord(
        0.0, z, code, res.discord, res.fmin, res.theta_opt, c0, cplus, a=a
    )


def _xxz_row(args):
    a, z_range, n_z = args
    return [_xxz_point(a, float(z)) for z in np.linspace(*z_range, n_z)]


def xxz_region_map(
    a_range=(0.0, 0.5),
    z_range=(0.0, 0.5),
    n_a: int = DEFAULT_RESOLUTION,
    n_z: int = DEFAULT_RESOLUTION,
    max_workers: int = None,
):
    """Branch map of the symmetric model on the (a, z) plane at w = 0."""
    if n_a < 2 or n_z < 2:
        raise ValueError("resolution must be at least 2 per axis")
    jobs = [(float(a), z_range, n_z) for a in np.linspace(*a_range, n_a)]
    if max_workers is not None and max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            rows = list(pool.map(_xxz_row, jobs, chunksize=4))
    else:
        rows = [_xxz_row(job) for job in jobs]
    return [record for row in rows for record in row]


def trace_boundary(diagonals, criterion, line, tol=1e-10, samples=BOUNDARY_SAMPLES):
    """Sign-change roots of C0 or C+ along a (w, z) segment.

    Returns the crossing points as (w, z) pairs, ordered along the segment;
    empty list when the criterion never changes sign.
    """
    try:
        crit = {"C0": compute_C0, "C+": compute_Cplus}[criterion]
    except KeyError:
        raise ValueError(f"criterion must be 'C0' or 'C+', got {criterion!r}")
    a, b, c, d = diagonals
    (w0, z0), (w1, z1) = line

    def g(t):
        return crit(make_state(a, b, c, d, w0 + (w1 - w0) * t, z0 + (z1 - z0) * t))

    ts = np.linspace(0.0, 1.0, samples)
    values = [g(float(t)) for t in ts]
    roots = []
    for i in range(samples - 1):
        if values[i] == 0.0:
            roots.append(float(ts[i]))
        elif values[i] * values[i + 1] < 0.0:
            roots.append(float(brentq(g, float(ts[i]), float(ts[i + 1]), xtol=tol)))
    if values[-1] == 0.0:
        roots.append(float(ts[-1]))
    return [(w0 + (w1 - w0) * t, z0 + (z1 - z0) * t) for t in roots]


def _g17(x) -> str:
    return "%.17g" % float(x)


def records_to_csv(records, include_a=False, include_oracle=False) -> str:
    """Delimited serialization with a fixed header and 17-digit floats."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["w", "z", "class", "discord", "Fmin", "thetaOpt", "C0", "Cplus"]
    if include_a:
        header = ["a"] + header
    if include_oracle:
        header = header + ["oracleDiscord"]
    writer.writerow(header)
    for rec in records:
        row = [
            _g17(rec.w), _g17(rec.z), rec.code, _g17(rec.discord),
            _g17(rec.fmin), _g17(rec.theta_opt), _g17(rec.c0), _g17(rec.cplus),
        ]
        if include_a:
            row = [_g17(rec.a)] + row
        if include_oracle:
            row = row + [_g17(rec.oracle_discord)]
        writer.writerow(row)
    return out.getvalue()
