"""Command-line entry point ``orbit-entropy``.

Exit codes: 0 ok, 2 parse error, 3 not positive definite, 4 target outside
the attainable interval, 5 verification failure.
"""

import argparse
import csv
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bistoch import bistoch_orbit_explore
from .entropy import bits_to_nats, relative_entropy
from .errors import NonHermitianInput, NotPositiveDefinite, TargetOutOfInterval
from .matcore import UNITARY_TOL, conjugate, is_unitary
from .matrixfile import MatrixFileError, file_digest, read_matrix, write_matrix
from .oracle import monte_carlo_containment
from .orbit import INTERVAL_TOL, orbit_relent_bounds, synthesize_target, trace_overlap_range

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_PD = 3
EXIT_TARGET = 4
EXIT_VIOLATION = 5

SEED_ENV = "ORBIT_ENTROPY_SEED"
SYNTH_TOL = 1e-8


class _Failure(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _default_seed():
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw else 0


def _emit(record, as_json, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(record, indent=2) + "\n")
        return
    for key, value in record.items():
        if isinstance(value, float):
            value = repr(value)
        elif isinstance(value, (list, tuple, dict)):
            value = json.dumps(value)
        out.write(f"{key}: {value}\n")


def _load_pair(args):
    return read_matrix(args.rho), read_matrix(args.sigma)


def _inputs(args):
    return {"rho": file_digest(args.rho), "sigma": file_digest(args.sigma)}


def cmd_bounds(args):
    rho, sigma = _load_pair(args)
    iv = orbit_relent_bounds(rho, sigma)
    lo, hi = trace_overlap_range(rho, sigma)
    conv = bits_to_nats if args.nats else float
    record = {
        "tool_version": __version__,
        "inputs": _inputs(args),
        "base": "nats" if args.nats else "bits",
        "s_min": conv(iv.s_min),
        "s_max": conv(iv.s_max),
        "f_min": conv(iv.f_min),
        "f_max": conv(iv.f_max),
        "trace_overlap_lo": lo,
        "trace_overlap_hi": hi,
        "tolerance": INTERVAL_TOL,
    }
    if args.emit_unitaries:
        outdir = Path(args.emit_unitaries)
        outdir.mkdir(parents=True, exist_ok=True)
        write_matrix(outdir / "u_min.json", iv.u_min)
        write_matrix(outdir / "u_max.json", iv.u_max)
        record["u_min_file"] = str(outdir / "u_min.json")
        record["u_max_file"] = str(outdir / "u_max.json")
    _emit(record, args.json)
    return EXIT_OK


def _synthesize_checked(rho, sigma, target):
    u, plan = synthesize_target(rho, sigma, target)
    achieved = relative_entropy(conjugate(u, rho), sigma)
    err = abs(achieved - target)
    if err > SYNTH_TOL or not is_unitary(u, UNITARY_TOL):
        raise _Failure(
            EXIT_VIOLATION, f"synthesis re-verification failed: |S - target| = {err:.3g}"
        )
    return u, plan, achieved, err


def cmd_synth(args):
    rho, sigma = _load_pair(args)
    u, plan, achieved, err = _synthesize_checked(rho, sigma, args.target)
    write_matrix(args.out, u)
    record = {
        "tool_version": __version__,
        "inputs": _inputs(args),
        "target": args.target,
        "achieved": achieved,
        "abs_error": err,
        "steps_used": len(plan.steps),
        "steps": [[a, b, k] for a, b, k in plan.steps],
        "unitary_file": str(args.out),
    }
    _emit(record, args.json)
    return EXIT_OK


def cmd_verify(args):
    rho, sigma = _load_pair(args)
    seed = args.seed if args.seed is not None else _default_seed()
    interval = None
    if args.corrupt_bounds:
        iv = orbit_relent_bounds(rho, sigma)
        mid = 0.5 * (iv.s_min + iv.s_max)
        interval = (mid, mid)
    report = monte_carlo_containment(
        rho, sigma, args.samples, seed=seed, pair_id=Path(args.rho).stem + "/" + Path(args.sigma).stem,
        interval=interval,
    )
    record = {"tool_version": __version__, "inputs": _inputs(args), "seed": seed}
    record.update(report.as_dict())
    _emit(record, args.json)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_sweep(args):
    rho, sigma = _load_pair(args)
    if args.steps < 2:
        raise _Failure(EXIT_PARSE, "--steps must be >= 2")
    iv = orbit_relent_bounds(rho, sigma)
    targets = np.linspace(iv.s_min, iv.s_max, args.steps)
    rows = []
    for target in targets:
        target = float(target)
        try:
            _, plan, achieved, err = _synthesize_checked(rho, sigma, target)
        except _Failure as exc:
            raise _Failure(EXIT_TARGET, str(exc)) from exc
        rows.append((target, achieved, err, len(plan.steps)))
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["target", "achieved", "abs_error", "steps_used"])
        for target, achieved, err, n in rows:
            writer.writerow([repr(target), repr(achieved), repr(err), n])
    record = {
        "rows": len(rows),
        "max_abs_error": max(r[2] for r in rows),
        "csv": str(args.out),
    }
    _emit(record, args.json)
    return EXIT_OK


def cmd_bistoch(args):
    rho, sigma = _load_pair(args)
    if args.samples < 1 or args.mix < 1:
        raise _Failure(EXIT_PARSE, "--samples and --mix must be >= 1")
    seed = args.seed if args.seed is not None else _default_seed()
    lo, hi, iv = bistoch_orbit_explore(rho, sigma, args.samples, args.mix, seed)
    record = {
        "tool_version": __version__,
        "inputs": _inputs(args),
        "seed": seed,
        "samples": args.samples,
        "mix": args.mix,
        "unitary_s_min": iv.s_min,
        "unitary_s_max": iv.s_max,
        "observed_min": lo,
        "observed_max": hi,
        "below_unitary_min": "yes" if lo < iv.s_min - INTERVAL_TOL else "no",
        "gap_below_min": iv.s_min - lo,
    }
    _emit(record, args.json)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbit-entropy",
        description="Range of S(U rho U* || sigma) over unitaries U (base-2 logarithms).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(p):
        p.add_argument("--rho", required=True, help="matrix file for rho")
        p.add_argument("--sigma", required=True, help="matrix file for sigma")
        p.add_argument("--json", action="store_true", help="emit JSON instead of key: value lines")

    p = sub.add_parser("bounds", help="attainable interval and achieving unitaries")
    pair(p)
    p.add_argument("--emit-unitaries", metavar="DIR")
    p.add_argument("--nats", action="store_true", help="report entropies in nats")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("synth", help="unitary achieving a target relative entropy")
    pair(p)
    p.add_argument("--target", type=float, required=True, help="target value in bits")
    p.add_argument("--out", required=True, help="where to write the unitary")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("verify", help="Monte Carlo containment check on Haar samples")
    pair(p)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--corrupt-bounds", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="synthesize uniformly spaced targets into a CSV")
    pair(p)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bistoch", help="explore mixed-unitary images of rho")
    pair(p)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--mix", type=int, default=4)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_bistoch)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "samples", 1) < 1:
            raise _Failure(EXIT_PARSE, "--samples must be >= 1")
        return args.func(args)
    except (MatrixFileError, NonHermitianInput) as exc:
        code, msg = EXIT_PARSE, f"parse error: {exc}"
    except NotPositiveDefinite as exc:
        code, msg = EXIT_NOT_PD, str(exc)
    except TargetOutOfInterval as exc:
        code, msg = EXIT_TARGET, str(exc)
    except _Failure as exc:
        code, msg = exc.code, str(exc)
    print(f"orbit-entropy: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
