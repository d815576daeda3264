"""Command-line interface.

Subcommands: ``eval`` (deadline queries), ``cdf`` (bracket CSV export),
``bench`` (accuracy/runtime matrices), ``gen`` (benchmark instances).
Reports are line-oriented ``key=value`` records with 17-significant-digit
floats.  Exit codes: 0 success, 2 plan parse/schema error, 3 exact route
infeasible under the support cap, 1 other domain errors.

The default support cap (10^7 atoms) can be overridden per call with
``--cap`` or globally with the ``MAKESPAN_SUPPORT_CAP`` environment
variable.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from .baselines import CONFIDENCE, estimate_deadline_probability, exact_distribution
from .brackets import bracket, network_approx
from .errors import (
    MakespanError,
    PlanParseError,
    PlanSchemaError,
    SupportCapExceededError,
)
from .gen import Family, GenSpec, generate
from .bench import PRESETS, load_matrix, run_matrix, write_rows
from .ops import DEFAULT_SUPPORT_CAP, BoundSide
from .planio import load_plan, save_plan
from .tree import node_count

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3

_CAP_ENV = "MAKESPAN_SUPPORT_CAP"

_FAMILIES = {
    "linear": Family.LINEAR,
    "logistics": Family.LOGISTICS_LIKE,
    "random": Family.RANDOM_MIXED,
    "adversarial": Family.ADVERSARIAL_TIGHT,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PlanParseError, PlanSchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SupportCapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except MakespanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="makespan",
        description=(
            "Certified deadline probabilities for series-parallel plans. "
            "Deadline queries use the non-strict P(makespan <= T)."
        ),
    )
    sub = parser.add_subparsers(required=True)

    p_eval = sub.add_parser("eval", help="answer a deadline query for a plan file")
    p_eval.add_argument("--plan", required=True, help="plan JSON file")
    p_eval.add_argument("--deadline", type=float, required=True, metavar="T")
    p_eval.add_argument(
        "--mode",
        choices=["interval", "upper", "lower", "exact", "sample"],
        default="interval",
    )
    p_eval.add_argument("--eps", type=float, default=0.1, help="accuracy target in (0,1)")
    p_eval.add_argument("--samples", type=int, default=10_000)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--cap", type=int, default=None, help="support cap for exact composition")
    p_eval.set_defaults(func=_cmd_eval)

    p_cdf = sub.add_parser("cdf", help="export a CDF bracket as CSV")
    p_cdf.add_argument("--plan", required=True)
    p_cdf.add_argument("--eps", type=float, required=True)
    p_cdf.add_argument("--cap", type=int, default=None)
    p_cdf.add_argument("--out", required=True, help="output CSV path")
    p_cdf.set_defaults(func=_cmd_cdf)

    p_bench = sub.add_parser("bench", help="run an accuracy/runtime benchmark matrix")
    src = p_bench.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(PRESETS))
    src.add_argument("--matrix", help="matrix spec JSON file")
    p_bench.add_argument("--out", required=True, help="output CSV path")
    p_bench.set_defaults(func=_cmd_bench)

    p_gen = sub.add_parser("gen", help="generate a benchmark plan file")
    p_gen.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p_gen.add_argument("--nodes", type=int, default=10)
    p_gen.add_argument("--bins", type=int, default=4)
    p_gen.add_argument("--branching", type=int, default=4)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--adv-n", type=int, default=10, help="adversarial: number of variables")
    p_gen.add_argument("--adv-eps", type=float, default=0.1, help="adversarial: realized error target")
    p_gen.add_argument("--adv-delta", type=float, default=1e-6, help="adversarial: spike mass")
    p_gen.add_argument("--out", required=True, help="output plan JSON path")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(_CAP_ENV)
    return int(env) if env else DEFAULT_SUPPORT_CAP


def _emit(key: str, value) -> None:
    if isinstance(value, float):
        print(f"{key}={value:.17g}")
    else:
        print(f"{key}={value}")


def _cmd_eval(args) -> int:
    tree = load_plan(args.plan)
    _emit("plan", args.plan)
    _emit("mode", args.mode)
    _emit("deadline", float(args.deadline))
    cap = _cap(args)
    if args.mode == "interval":
        iv = bracket(tree, args.eps, support_cap=cap).interval_at(args.deadline)
        _emit("eps", float(args.eps))
        _emit("lo", iv.lo)
        _emit("hi", iv.hi)
        _emit("width", iv.width)
    elif args.mode in ("upper", "lower"):
        side = BoundSide.UPPER if args.mode == "upper" else BoundSide.LOWER
        dist = network_approx(tree, args.eps, side, support_cap=cap)
        _emit("eps", float(args.eps))
        _emit("probability", dist.cdf(args.deadline))
        _emit("guarantee", f"{args.mode} bound, one-sided error <= eps")
    elif args.mode == "exact":
        try:
            dist = exact_distribution(tree, support_cap=cap)
        except SupportCapExceededError as exc:
            _emit("status", "infeasible")
            _emit("reason", str(exc))
            return EXIT_INFEASIBLE
        _emit("probability", dist.cdf(args.deadline))
        _emit("support_size", dist.size)
    else:  # sample
        est = estimate_deadline_probability(tree, args.deadline, args.samples, args.seed)
        _emit("p_hat", est.p_hat)
        _emit("n_samples", est.n_samples)
        _emit("seed", est.seed)
        _emit("halfwidth", est.hoeffding_halfwidth)
        _emit("confidence", CONFIDENCE)
    return EXIT_OK


def _cmd_cdf(args) -> int:
    tree = load_plan(args.plan)
    br = bracket(tree, args.eps, support_cap=_cap(args))
    grid = np.unique(np.concatenate([br.upper.support, br.lower.support]))
    lower = br.lower.cdf(grid)
    upper = br.upper.cdf(grid)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("t,cdf_lower,cdf_upper\n")
        for t, lo, hi in zip(grid, lower, upper):
            fh.write(f"{t:.17g},{lo:.17g},{hi:.17g}\n")
    _emit("rows", grid.size)
    _emit("out", args.out)
    return EXIT_OK


def _cmd_bench(args) -> int:
    spec = PRESETS[args.preset] if args.preset else load_matrix(args.matrix)
    rows = run_matrix(spec)
    write_rows(rows, args.out)
    _emit("rows", len(rows))
    _emit("out", args.out)
    return EXIT_OK


def _cmd_gen(args) -> int:
    spec = GenSpec(
        family=_FAMILIES[args.family],
        nodes=args.nodes,
        bins=args.bins,
        branching=args.branching,
        seed=args.seed,
        adv_n=args.adv_n,
        adv_eps=args.adv_eps,
        adv_delta=args.adv_delta,
    )
    tree = generate(spec)
    save_plan(tree, args.out)
    _emit("family", args.family)
    _emit("nodes", node_count(tree))
    _emit("out", args.out)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
