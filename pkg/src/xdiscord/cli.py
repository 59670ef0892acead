"""Command-line front end.

One subcommand per library entry point; states come in either as inline
flags (--a ... --z) or as a JSON file, results go out as JSON or CSV with
17-significant-digit floats so values re-parse bit-exactly.  NaN (for
example C0 under a degenerate fallback) serializes as null.

Exit codes: 0 success, 2 invalid state or flags, 3 internal consistency
failure (negative correlation beyond round-off, or an oracle mismatch in
a --with-oracle sweep).
"""

import argparse
import json
import math
import os
import sys

from .classifier import EPSILON_ZERO, MeasurementClass, classify, solve_theta_e
from .discord import quantum_discord
from .errors import (
    DegenerateLimit,
    InternalConsistencyError,
    InvalidState,
    RootNotFound,
)
from .oracle import OracleConfig, grid_minimize, oracle_discord
from .scan import (
    RegionMapSpec,
    SweepSpec,
    records_to_csv,
    region_map,
    sweep_z,
    trace_boundary,
    xxz_region_map,
)
from .states import entropy_a, entropy_joint, from_dict, make_state, to_dict
from .xxz import XXZState, xxz_discord, xxz_region

# A sweep row where the analytic and brute-force discord disagree by more
# than this aborts with exit code 3.
ORACLE_MATCH_TOL = 1e-9


def _format_json(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f'{pad}  {json.dumps(str(k))}: {_format_json(v, indent + 1)}'
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}  {_format_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return "null"
        return "%.17g" % value
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "null"
    return json.dumps(value)


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _load_state(args):
    if getattr(args, "json", None):
        with open(args.json) as fh:
            data = json.load(fh)
        if isinstance(data, dict) and isinstance(data.get("state"), dict):
            data = data["state"]
        return from_dict(data)
    missing = [k for k in ("a", "b", "c", "d") if getattr(args, k) is None]
    if missing:
        raise InvalidState(
            "state requires --a --b --c --d (or --json FILE); missing: "
            + ", ".join("--" + k for k in missing)
        )
    return make_state(args.a, args.b, args.c, args.d, args.w, args.z)


def _max_workers():
    raw = os.environ.get("XDISCORD_THREADS")
    if raw is None:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"XDISCORD_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"XDISCORD_THREADS must be a positive integer, got {raw!r}")
    return n


def _add_state_flags(sp, coherences=True):
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--b", type=float, default=None)
    sp.add_argument("--c", type=float, default=None)
    sp.add_argument("--d", type=float, default=None)
    if coherences:
        sp.add_argument("--w", type=float, default=0.0)
        sp.add_argument("--z", type=float, default=0.0)
    sp.add_argument("--json", metavar="FILE", default=None,
                    help="read the state from a JSON file instead of flags")


def _add_output_flag(sp):
    sp.add_argument("-o", "--output", default=None,
                    help="output file (default: standard output)")


def _cmd_compute(args):
    state = _load_state(args)
    res = quantum_discord(state)
    payload = {
        "state": to_dict(state),
        "discord": res.discord,
        "classicalCorrelation": res.classical_correlation,
        "mutualInformation": res.mutual_information,
        "Fmin": res.fmin,
        "class": res.tag.value,
        "thetaOpt": res.theta_opt,
        "phiOpt": res.phi_opt,
        "C0": res.c0,
        "Cplus": res.cplus,
        "usedFallback": res.used_fallback,
    }
    _emit(_format_json(payload), args.output)
    return 0


def _cmd_classify(args):
    state = _load_state(args)
    rep = classify(state, epsilon_zero=args.epsilon_zero)
    payload = {
        "C0": rep.c0,
        "Cplus": rep.cplus,
        "class": rep.tag.value,
        "thetaOpt": rep.theta_opt,
        "Fmin": rep.fmin,
        "usedFallback": rep.used_fallback,
    }
    _emit(_format_json(payload), args.output)
    return 0


def _cmd_theta_e(args):
    state = _load_state(args)
    rep = classify(state)
    if rep.tag is not MeasurementClass.SIGMA_E or rep.used_fallback:
        print(f"error: class is {rep.tag.value}, not SE", file=sys.stderr)
        return 2
    try:
        theta_e = solve_theta_e(state, tol=args.tol)
    except (RootNotFound, DegenerateLimit) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(_format_json({"thetaE": theta_e, "class": rep.tag.value}), args.output)
    return 0


def _cmd_oracle(args):
    state = _load_state(args)
    config = OracleConfig(args.n_theta, args.n_phi, args.refine_tol)
    theta, phi, fmin = grid_minimize(state, config)
    payload = {
        "discord": fmin - entropy_joint(state) + entropy_a(state),
        "Fmin": fmin,
        "thetaOpt": theta,
        "phiOpt": phi,
    }
    _emit(_format_json(payload), args.output)
    return 0


def _cmd_sweep(args):
    spec = SweepSpec(
        args.a, args.b, args.c, args.d, args.w,
        z_range=_range_or_none(args.z_min, args.z_max),
        samples=args.samples,
    )
    config = OracleConfig(args.n_theta, args.n_phi)
    records = sweep_z(spec, with_oracle=args.with_oracle, oracle_config=config)
    if args.with_oracle:
        for rec in records:
            if rec.code == "SKIP":
                continue
            if abs(rec.discord - rec.oracle_discord) > ORACLE_MATCH_TOL:
                raise InternalConsistencyError(
                    f"analytic/oracle discord mismatch at z = {rec.z!r}: "
                    f"{rec.discord!r} vs {rec.oracle_discord!r}"
                )
    _emit(records_to_csv(records, include_oracle=args.with_oracle), args.output)
    if args.plot:
        from .plots import plot_sweep

        plot_sweep(records, args.plot)
    return 0


def _cmd_scan_region(args):
    spec = RegionMapSpec(
        args.a, args.b, args.c, args.d,
        w_range=_range_or_none(args.w_min, args.w_max),
        z_range=_range_or_none(args.z_min, args.z_max),
        n_w=args.n_w, n_z=args.n_z,
    )
    records = region_map(spec, max_workers=_max_workers())
    _emit(records_to_csv(records), args.output)
    if args.plot:
        from .plots import plot_region_map

        plot_region_map(records, spec.n_w, spec.n_z, args.plot)
    return 0


def _cmd_xxz(args):
    if args.map:
        records = xxz_region_map(
            a_range=(args.a_min, args.a_max),
            z_range=(args.z_min if args.z_min is not None else 0.0,
                     args.z_max if args.z_max is not None else 0.5),
            n_a=args.n_a, n_z=args.n_z,
            max_workers=_max_workers(),
        )
        _emit(records_to_csv(records, include_a=True), args.output)
        if args.plot:
            from .plots import plot_xxz_map

            plot_xxz_map(records, args.n_a, args.n_z, args.plot)
        return 0
    if args.a is None:
        raise InvalidState("xxz requires --a (or --map with ranges)")
    xxz = XXZState(args.a, args.w, args.z)
    res = xxz_discord(xxz)
    branch, on_boundary = xxz_region(xxz)
    payload = {
        "a": xxz.a,
        "w": xxz.w,
        "z": xxz.z,
        "discord": res.discord,
        "classicalCorrelation": res.classical_correlation,
        "mutualInformation": res.mutual_information,
        "Fmin": res.fmin,
        "branch": branch.value,
        "onBoundary": on_boundary,
        "thetaOpt": res.theta_opt,
    }
    _emit(_format_json(payload), args.output)
    return 0


def _cmd_trace_boundary(args):
    crossings = trace_boundary(
        (args.a, args.b, args.c, args.d),
        args.criterion,
        ((args.w0, args.z0), (args.w1, args.z1)),
        tol=args.tol,
        samples=args.samples,
    )
    payload = {
        "criterion": args.criterion,
        "crossings": [{"w": w, "z": z} for w, z in crossings],
    }
    _emit(_format_json(payload), args.output)
    return 0


def _range_or_none(lo, hi):
    if lo is None and hi is None:
        return None
    return (lo if lo is not None else 0.0, hi if hi is not None else math.inf)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xdiscord",
        description="Analytic quantum discord of two-qubit X-states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", help="discord and correlations of one state")
    _add_state_flags(sp)
    _add_output_flag(sp)
    sp.set_defaults(func=_cmd_compute)

    sp = sub.add_parser("classify", help="criteria signs and measurement class")
    _add_state_flags(sp)
    _add_output_flag(sp)
    sp.add_argument("--epsilon-zero", type=float, default=EPSILON_ZERO)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("theta-e", help="interior stationary angle of an SE state")
    _add_state_flags(sp)
    _add_output_flag(sp)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.set_defaults(func=_cmd_theta_e)

    sp = sub.add_parser("oracle", help="brute-force minimum for cross-checking")
    _add_state_flags(sp)
    _add_output_flag(sp)
    sp.add_argument("--n-theta", type=int, default=721)
    sp.add_argument("--n-phi", type=int, default=181)
    sp.add_argument("--refine-tol", type=float, default=1e-10)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("sweep", help="discord along a z-line at fixed w (CSV)")
    for flag in ("--a", "--b", "--c", "--d", "--w"):
        sp.add_argument(flag, type=float, required=True)
    sp.add_argument("--z-min", type=float, default=None)
    sp.add_argument("--z-max", type=float, default=None)
    sp.add_argument("--samples", type=int, default=400)
    sp.add_argument("--with-oracle", action="store_true",
                    help="append a brute-force column and cross-check rows")
    sp.add_argument("--n-theta", type=int, default=721)
    sp.add_argument("--n-phi", type=int, default=181)
    sp.add_argument("--plot", metavar="FILE", default=None,
                    help="also render the sweep curve to an image file")
    _add_output_flag(sp)
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("scan-region", help="measurement-class map on (w, z) (CSV)")
    for flag in ("--a", "--b", "--c", "--d"):
        sp.add_argument(flag, type=float, required=True)
    sp.add_argument("--w-min", type=float, default=None)
    sp.add_argument("--w-max", type=float, default=None)
    sp.add_argument("--z-min", type=float, default=None)
    sp.add_argument("--z-max", type=float, default=None)
    sp.add_argument("--n-w", type=int, default=400)
    sp.add_argument("--n-z", type=int, default=400)
    sp.add_argument("--plot", metavar="FILE", default=None,
                    help="also render the class map to an image file")
    _add_output_flag(sp)
    sp.set_defaults(func=_cmd_scan_region)

    sp = sub.add_parser("xxz", help="symmetric-model discord, or --map for (a, z) CSV")
    sp.add_argument("--a", type=float, default=None)
    sp.add_argument("--w", type=float, default=0.0)
    sp.add_argument("--z", type=float, default=0.0)
    sp.add_argument("--map", action="store_true")
    sp.add_argument("--a-min", type=float, default=0.0)
    sp.add_argument("--a-max", type=float, default=0.5)
    sp.add_argument("--z-min", type=float, default=None)
    sp.add_argument("--z-max", type=float, default=None)
    sp.add_argument("--n-a", type=int, default=400)
    sp.add_argument("--n-z", type=int, default=400)
    sp.add_argument("--plot", metavar="FILE", default=None,
                    help="with --map, also render the branch map to an image file")
    _add_output_flag(sp)
    sp.set_defaults(func=_cmd_xxz)

    sp = sub.add_parser("trace-boundary", help="criterion zero crossings on a segment")
    for flag in ("--a", "--b", "--c", "--d"):
        sp.add_argument(flag, type=float, required=True)
    sp.add_argument("--criterion", choices=("C0", "C+"), required=True)
    sp.add_argument("--w0", type=float, required=True)
    sp.add_argument("--z0", type=float, required=True)
    sp.add_argument("--w1", type=float, required=True)
    sp.add_argument("--z1", type=float, required=True)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--samples", type=int, default=512)
    _add_output_flag(sp)
    sp.set_defaults(func=_cmd_trace_boundary)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (InvalidState, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
