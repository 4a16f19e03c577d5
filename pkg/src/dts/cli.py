"""Command-line front end: intervals, witnesses, sweeps, solvers, verify.

All machine output is JSON (or CSV for sweeps) on stdout; diagnostics go
to stderr.  Exit codes: 0 success, 1 domain/usage errors, 2 internal
constraint violations (including verification failures).

Slopes are always entered as reduced fractions "P/Q" (or a bare integer),
never as floats: the surgery condition is arithmetic in p and q.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import slopes, verify
from .numeric import DomainError
from .riley import phi_residual, solve_x
from .slopes import (ConstraintViolation, Family, SearchFailure,
                     SlopeNotCertified, TrefoilExcluded)

_ENV_SEED = "DTS_SEED"


def _num(v: float):
    # integral endpoints print as integers; everything else round-trips
    return int(v) if float(v).is_integer() else float(v)


def _fmt(v: float) -> str:
    return f"{float(v):.17g}"


def _interval_dict(iv: slopes.Interval) -> dict:
    return {"lo": _num(iv.lo), "hi": _num(iv.hi),
            "lo_open": iv.lo_open, "hi_open": iv.hi_open}


def _sample_dict(s: slopes.SlopeSample) -> dict:
    return {"family": s.family.value, "m": s.m, "n": s.n, "param": s.param,
            "M": s.M, "L": s.L, "r": s.r,
            "relation_residual": s.relation_residual}


def _parse_slope(text: str) -> tuple:
    parts = text.split("/")
    try:
        if len(parts) == 1:
            p, q = int(parts[0]), 1
        elif len(parts) == 2:
            p, q = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise DomainError(f"slope must look like P/Q or an integer, got {text!r}") from None
    if q == 0:
        raise DomainError("slope denominator must be nonzero")
    if q < 0:
        p, q = -p, -q
    return p, q


def _cmd_intervals(args) -> int:
    ivs = slopes.theorem_intervals(args.m, args.n,
                                   include_proof_endpoint=args.proof_endpoint)
    if args.json:
        print(json.dumps({"m": args.m, "n": args.n,
                          "intervals": [_interval_dict(iv) for iv in ivs.intervals]}))
    else:
        print(f"certified left-orderable slopes for J({2*args.m}, {2*args.n}): {ivs}")
    return 0


def _cmd_witness(args) -> int:
    p, q = _parse_slope(args.r)
    g = Fraction(p, q)
    w = slopes.find_witness(args.m, args.n, g.numerator, g.denominator, tol=args.tol)
    out = {"m": args.m, "n": args.n, "p": w.p, "q": w.q, "kind": w.kind,
           "scalar_residual": w.scalar_residual,
           "sample": _sample_dict(w.sample) if w.sample else None}
    if w.note:
        out["note"] = w.note
    print(json.dumps(out, indent=2))
    return 0


def _cmd_sweep(args) -> int:
    family = Family(args.family)
    result = slopes.sweep(family, args.m, args.n, points=args.points)
    rows = [[s.family.value, _fmt(s.param), _fmt(s.M), _fmt(s.L), _fmt(s.r),
             _fmt(s.relation_residual)] for s in result.samples]
    header = ["family", "param", "M", "L", "r", "residual"]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        writer.writerows(rows)
    if result.errors:
        print(f"{len(result.errors)} grid points failed (first: "
              f"{result.errors[0][1]})", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    ids = [verify.IdentityId(args.id)] if args.id else None
    reports = verify.run_all(ids, trials=args.trials, seed=args.seed,
                             exhaustive=args.exhaustive)
    print(json.dumps([dataclasses.asdict(r) for r in reports], indent=2))
    return 0 if all(r.passed for r in reports) else 2


def _cmd_solve(args) -> int:
    if args.s0 is not None:
        print(json.dumps({"n": args.s0, "s0": slopes.solve_s0(args.s0)}))
    else:
        print(json.dumps({"n": args.omega, "omega": slopes.omega(args.omega)}))
    return 0


def _cmd_riley_roots(args) -> int:
    p = solve_x(args.m, args.n, args.y)
    print(json.dumps({"m": args.m, "n": args.n, "y": args.y,
                      "x": float(p.x), "M": float(p.M),
                      "phi_residual": float(phi_residual(p))}))
    return 0


class _Parser(argparse.ArgumentParser):
    # usage problems are input-domain problems: exit 1, not argparse's 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="dts",
                     description="Representation families and certified "
                                 "left-orderable surgery slopes of double twist knots")
    sub = parser.add_subparsers(dest="command", required=True)

    p_int = sub.add_parser("intervals", help="certified slope interval set")
    p_int.add_argument("-m", type=int, required=True)
    p_int.add_argument("-n", type=int, required=True)
    p_int.add_argument("--json", action="store_true")
    p_int.add_argument("--proof-endpoint", action="store_true",
                       help="include the proof-route endpoint for n = -1, m >= 2")
    p_int.set_defaults(func=_cmd_intervals)

    p_wit = sub.add_parser("witness", help="certify one slope p/q")
    p_wit.add_argument("-m", type=int, required=True)
    p_wit.add_argument("-n", type=int, required=True)
    p_wit.add_argument("-r", required=True, help="slope as P/Q (exact fraction)")
    p_wit.add_argument("--tol", type=float, default=1e-9)
    p_wit.set_defaults(func=_cmd_witness)

    p_swp = sub.add_parser("sweep", help="sample a family along its grid (CSV)")
    p_swp.add_argument("--family", required=True,
                       choices=[f.value for f in Family])
    p_swp.add_argument("-m", type=int, required=True)
    p_swp.add_argument("-n", type=int, required=True)
    p_swp.add_argument("--points", type=int, default=512)
    p_swp.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    p_swp.set_defaults(func=_cmd_sweep)

    p_ver = sub.add_parser("verify", help="run the exact identity suite")
    p_ver.add_argument("--id", choices=[i.value for i in verify.IdentityId])
    p_ver.add_argument("--trials", type=int, default=20)
    p_ver.add_argument("--seed", type=int,
                       default=int(os.environ.get(_ENV_SEED, verify.DEFAULT_SEED)))
    p_ver.add_argument("--exhaustive", action="store_true",
                       help="deterministic grids larger than the degree bounds")
    p_ver.set_defaults(func=_cmd_verify)

    p_sol = sub.add_parser("solve", help="scalar solver values")
    group = p_sol.add_mutually_exclusive_group(required=True)
    group.add_argument("--s0", type=int, metavar="N",
                       help="solve (s^(2N-1) - s^(-2N))(s-1) = 4")
    group.add_argument("--omega", type=int, metavar="N",
                       help="solve t e^t = 4(2N-1)")
    p_sol.set_defaults(func=_cmd_solve)

    p_rr = sub.add_parser("riley-roots", help="certified Riley root at fixed y")
    p_rr.add_argument("-m", type=int, required=True)
    p_rr.add_argument("-n", type=int, required=True)
    p_rr.add_argument("-y", type=float, required=True)
    p_rr.set_defaults(func=_cmd_riley_roots)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TrefoilExcluded, SlopeNotCertified, DomainError, ValueError) as exc:
        print(f"dts: {exc}", file=sys.stderr)
        return 1
    except (ConstraintViolation, SearchFailure, ArithmeticError) as exc:
        print(f"dts: internal: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
