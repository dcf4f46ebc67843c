"""Command-line front end.

Exit codes: 0 success, 1 configuration or argument error, 2 a failed
verdict (experiment assertion or VC mismatch).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
from typing import Optional, Sequence

from .bounds import FORMULAS, corollary_bound, predictive_transform, vidyasagar_bound
from .concepts import VC_MAX_CAP, ConceptClass, vc_dimension_bruteforce
from .config import load_config, parse_class
from .domain import DomainGrid
from .errors import ConfigError, PredPacError, SizeGuard
from .experiments import fmt, run_experiment, write_outputs

EXIT_OK, EXIT_CONFIG, EXIT_ASSERT = 0, 1, 2
VCDIM_MAX_GRID = 10


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer: {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="predpac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment from a JSON config")
    run.add_argument("--config", required=True)
    run.add_argument("--seed", type=_u64, help="override master_seed")
    run.add_argument("--workers", type=_positive_int, default=os.cpu_count() or 1)
    run.add_argument("--out", help="output directory (default: config 'output' or '.')")

    bounds = sub.add_parser("bounds", help="print sample-complexity table as CSV")
    bounds.add_argument("--d", type=int, required=True)
    bounds.add_argument("--delta", type=_float_list, required=True)
    bounds.add_argument("--epsilon", type=_float_list, required=True)
    bounds.add_argument("--formula", choices=FORMULAS, default="vidyasagar78")

    vcdim = sub.add_parser("vcdim", help="brute-force VC dimension check")
    vcdim.add_argument("--class", dest="class_spec", required=True,
                       help="family name, 'union_intervals:K', or a JSON class object")
    vcdim.add_argument("--grid", type=_float_list, required=True)

    gc = sub.add_parser("gc", help="run a gc_curve config and print rows as CSV")
    gc.add_argument("--config", required=True)

    validate = sub.add_parser("validate", help="check a config without running it")
    validate.add_argument("--config", required=True)
    return parser


def cmd_run(args) -> int:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = dataclasses.replace(cfg, master_seed=args.seed)
    out_dir = args.out or cfg.output or "."
    stem = os.path.splitext(os.path.basename(args.config))[0]
    result = run_experiment(cfg, args.workers)
    csv_path, json_path = write_outputs(result, out_dir, stem)
    print(f"wrote {csv_path} and {json_path}", file=sys.stderr)
    for v in result.summary.verdicts:
        print(f"{'PASS' if v['passed'] else 'FAIL'} {v['name']} {v['detail']}".rstrip())
    return EXIT_OK if result.summary.passed else EXIT_ASSERT


def cmd_bounds(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["d", "delta", "epsilon", "n_pac", "n_predictive"])
    if not args.delta or not args.epsilon:
        print("error: --delta and --epsilon need at least one value", file=sys.stderr)
        return EXIT_CONFIG
    for delta in args.delta:
        for eps in args.epsilon:
            n_pac = vidyasagar_bound(args.d, delta, eps)
            if args.formula == "vidyasagar78":
                n_pred = predictive_transform(lambda dl, e: vidyasagar_bound(args.d, dl, e), delta, eps)
            else:
                n_pred = corollary_bound(args.d, delta, eps)
            writer.writerow([fmt(args.d), fmt(delta), fmt(eps), fmt(n_pac), fmt(n_pred)])
    return EXIT_OK


def _parse_class_spec(text: str, grid: DomainGrid) -> ConceptClass:
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"malformed class spec: {exc}") from exc
    else:
        family, _, k = text.partition(":")
        obj = {"class": family}
        if k:
            obj["k"] = int(k)
    try:
        return parse_class(obj, grid)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_vcdim(args) -> int:
    if len(args.grid) > VCDIM_MAX_GRID:
        raise SizeGuard(f"probe grid limited to {VCDIM_MAX_GRID} points")
    grid = DomainGrid(tuple(args.grid))
    cls = _parse_class_spec(args.class_spec, grid)
    cap = min(VC_MAX_CAP, len(grid))
    if cls.declared_vc >= cap:
        raise SizeGuard(f"declared VC {cls.declared_vc} cannot be confirmed with search cap {cap}")
    found = vc_dimension_bruteforce(cls, grid, cap)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["class", "k", "declared_vc", "bruteforce_vc", "match"])
    writer.writerow([cls.family, cls.k, cls.declared_vc, found, int(found == cls.declared_vc)])
    return EXIT_OK if found == cls.declared_vc else EXIT_ASSERT


def cmd_gc(args) -> int:
    cfg = load_config(args.config)
    if cfg.kind != "gc_curve":
        raise ConfigError(f"gc expects a gc_curve config, got {cfg.kind!r}")
    result = run_experiment(cfg, os.cpu_count() or 1)
    header, rows = result.csv_rows()
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return EXIT_OK if result.summary.passed else EXIT_ASSERT


def cmd_validate(args) -> int:
    cfg = load_config(args.config)
    print(f"ok: {cfg.kind}, {cfg.trials} trials, n_grid={list(cfg.n_grid)}")
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "bounds": cmd_bounds,
    "vcdim": cmd_vcdim,
    "gc": cmd_gc,
    "validate": cmd_validate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (PredPacError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
