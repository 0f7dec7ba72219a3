"""Command-line interface.

Exit codes: 0 success, 1 runtime/validation failure (including tolerance
breaches, which signal an implementation bug by design), 2 usage errors.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import campaign, measures, overlaps, phasespace, states
from .errors import QroughError

LAMBDA_DEVIATION_TOL = 1e-12
ORACLE_TOL = 2e-4


def _default_workers() -> int:
    env = os.environ.get("QROUGH_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _cmd_measure(args) -> int:
    state = states.load_state(args.state)
    if not isinstance(state, states.TwoQubitState):
        raise QroughError("measure requires a 4x4 two-qubit state file")
    mt = measures.measure_tuple(state)
    out = mt.as_dict()
    out["rank_hint"] = state.rank_hint
    print(json.dumps(out, indent=2))
    return 0


def _cmd_verify(args) -> int:
    test_states = []
    if args.state is not None:
        st = states.load_state(args.state)
        if not isinstance(st, states.TwoQubitState):
            raise QroughError("verify requires a 4x4 two-qubit state file")
        test_states.append(st)
    else:
        for i in range(args.random):
            seed = states.derive_seed(args.seed, i)
            if args.rank == 1 and args.pure:
                test_states.append(states.haar_random_pure(seed))
            else:
                test_states.append(states.ginibre_random(args.rank, seed))

    max_mixed = 0.0
    max_pure = None
    for st in test_states:
        max_mixed = max(max_mixed, measures.relation_residual_mixed(st))
        if st.purity >= 1.0 - 1e-10:
            rp = measures.relation_residual_pure(st)
            max_pure = rp if max_pure is None else max(max_pure, rp)
    ok = max_mixed <= campaign.RESIDUAL_TOL and (max_pure is None or max_pure <= 1e-9)
    print(
        json.dumps(
            {
                "states": len(test_states),
                "max_residual_mixed": max_mixed,
                "max_residual_pure": max_pure,
                "tolerance_mixed": campaign.RESIDUAL_TOL,
                "tolerance_pure": 1e-9,
                "ok": ok,
            },
            indent=2,
        )
    )
    return 0 if ok else 1


def _cmd_lambda(_args) -> int:
    lam = overlaps.build_lambda()
    deviation = lam.max_deviation_from_target()
    table = {
        kind: {key: [val.numerator, val.denominator] for key, val in sub.items()}
        for kind, sub in overlaps.overlap_table().items()
    }
    out = {
        "lambda": [[float(e) for e in row] for row in lam.entries],
        "lambda_rational": [
            [[e.numerator, e.denominator] for e in row] for row in lam.entries
        ],
        "target": [[float(e) for e in row] for row in overlaps.LAMBDA_TARGET],
        "max_deviation": float(deviation),
        "overlap_table": table,
    }
    print(json.dumps(out, indent=2))
    return 0 if deviation <= Fraction(1, 10**12) else 1


def _oracle_battery():
    battery = [
        ("|0>", states.validate_single(np.diag([1.0, 0.0]))),
        ("|1>", states.validate_single(np.diag([0.0, 1.0]))),
        ("|+>", states.validate_single(np.full((2, 2), 0.5))),
        ("I/2", states.validate_single(np.diag([0.5, 0.5]))),
    ]
    rng = np.random.default_rng(20260823)
    for i in range(20):
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        w = g @ g.conj().T
        battery.append((f"rand{i:02d}", states.validate_single(w / np.trace(w).real)))
    return battery


def _cmd_oracle(args) -> int:
    grid = phasespace.PhaseSpaceGrid(half_width=args.halfwidth, points_per_axis=args.grid)
    rows = []
    worst = 0.0
    for name, st in _oracle_battery():
        closed = measures.roughness_sq_qubit(st)
        numeric = phasespace.roughness_numeric(st, grid) ** 2
        err = abs(numeric - closed)
        worst = max(worst, err)
        rows.append((name, closed, numeric, err))
    print(f"{'state':>8}  {'closed form R^2':>20}  {'numeric R^2':>20}  {'|diff|':>12}")
    for name, closed, numeric, err in rows:
        flag = "" if err <= ORACLE_TOL else "  FAIL"
        print(f"{name:>8}  {closed:20.15f}  {numeric:20.15f}  {err:12.3e}{flag}")
    print(f"max |diff| = {worst:.3e} (tolerance {ORACLE_TOL:g})")
    return 0 if worst <= ORACLE_TOL else 1


def _cmd_sample(args) -> int:
    config = campaign.CampaignConfig(
        ensemble=args.ensemble,
        samples=args.samples,
        master_seed=args.seed,
        bins_x=args.bins,
        bins_y=args.bins,
        workers=args.workers,
        keep_records=args.records,
    )
    _hist, summary = campaign.write_outputs(args.out, config)
    print(
        f"wrote {args.out}/histogram.csv, summary.json"
        + (", records.csv" if args.records else ""),
        file=sys.stderr,
    )
    print(
        f"max residual_mixed = {summary.max_residual_mixed:.3e}, "
        f"median C^2 = {summary.median_c2:.6g}, median R_+^2 = {summary.median_rplus2:.6g}",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrough",
        description="Roughness / Concurrence measures and complementary-relation tools "
        "for two-qubit states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="print all measures of a state file as JSON")
    p.add_argument("--state", required=True, help="path to a state JSON file")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("verify", help="check the complementary-relation residuals")
    p.add_argument("--state", help="path to a state JSON file")
    p.add_argument("--random", type=int, default=0, help="number of random states")
    p.add_argument("--rank", type=int, default=2, choices=(1, 2, 3, 4))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pure", action="store_true", help="with --rank 1: Haar-pure sampling")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lambda", help="rebuild the coefficient matrix from overlaps")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("oracle", help="numeric-vs-closed-form Roughness agreement table")
    p.add_argument("--grid", type=int, default=phasespace.DEFAULT_POINTS)
    p.add_argument("--halfwidth", type=float, default=phasespace.DEFAULT_HALF_WIDTH)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sample", help="run a Monte Carlo campaign and write CSV/JSON outputs")
    p.add_argument("--ensemble", required=True, choices=tuple(campaign.ENSEMBLE_RANKS))
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bins", type=int, default=200)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--records", action="store_true", help="also write per-sample records.csv")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "verify":
        if args.state is None and args.random <= 0:
            print("verify: provide --state PATH or --random N with N >= 1", file=sys.stderr)
            return 2
    if args.command == "oracle":
        if args.grid < 64 or args.halfwidth < 5:
            print("oracle: requires --grid >= 64 and --halfwidth >= 5", file=sys.stderr)
            return 2
    if args.command == "sample":
        if args.samples < 1:
            print("sample: --samples must be >= 1", file=sys.stderr)
            return 2
        if args.workers is None:
            args.workers = _default_workers()
        elif args.workers < 1:
            print("sample: --workers must be >= 1", file=sys.stderr)
            return 2

    try:
        return args.func(args)
    except (QroughError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
