"""Command-line front end: solve / decide / approx / gen / bench.

JSON reports go to stdout with a fixed key order and numbers printed to 12
significant digits. Exit codes: 0 ok, 2 input error, 3 internal invariant
failure, 4 cost fails the declared metric class.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .costs import CostOracle
from .errors import InputError, InternalError, MetricViolationError
from .generate import gen_instance
from .pipeline import (
    GRAPH_METRIC_CHECK_LIMIT,
    approx_tree,
    decide_tree,
    solve_tree,
)
from .solution import Solution
from .textio import read_cost, read_tree, write_cost, write_tree
from .tree import Tree, check_graph_metric


@dataclass
class RunReport:
    mode: str
    n: int
    diameter_before: float
    solution: Solution | None
    wall_time_ms: float
    seed: int | None = None

    def to_json(self) -> str:
        s = self.solution
        pairs = [
            ("u", _num(s.u) if s else "null"),
            ("v", _num(s.v) if s else "null"),
            ("cost", _num(s.shortcut_cost) if s else "null"),
            ("diameter_before", _num(self.diameter_before)),
            ("diameter_after", _num(s.diameter) if s else "null"),
            ("mode", f'"{self.mode}"'),
            ("wall_time_ms", _num(self.wall_time_ms)),
        ]
        return "{" + ", ".join(f'"{k}": {v}' for k, v in pairs) + "}"


def _num(x) -> str:
    if isinstance(x, int):
        return str(x)
    return f"{float(x):.12g}"


def _load(args) -> tuple[Tree, CostOracle]:
    tree = read_tree(args.tree)
    cost = read_cost(args.cost, tree)
    return tree, cost


def _require_graph_metric(tree: Tree, cost: CostOracle) -> None:
    if tree.n <= GRAPH_METRIC_CHECK_LIMIT and not check_graph_metric(tree, cost):
        raise MetricViolationError(
            "cost violates the graph-triangle inequality; use --mode general"
        )


def cmd_solve(args) -> RunReport:
    tree, cost = _load(args)
    if args.mode == "metric":
        _require_graph_metric(tree, cost)
    if args.mode == "general" and cost.kind != "matrix":
        raise InputError("--mode general requires an explicit matrix cost", reason="mode")
    before = tree.diameter()
    t0 = time.perf_counter()
    sol = solve_tree(tree, cost, args.mode)
    ms = (time.perf_counter() - t0) * 1e3
    return RunReport("solve-" + args.mode, tree.n, before, sol, ms)


def cmd_decide(args) -> RunReport:
    if args.budget is None:
        raise InputError("decide requires --lambda", reason="parse")
    tree, cost = _load(args)
    _require_graph_metric(tree, cost)
    before = tree.diameter()
    t0 = time.perf_counter()
    sol = decide_tree(tree, cost, args.budget)
    ms = (time.perf_counter() - t0) * 1e3
    return RunReport("decide", tree.n, before, sol, ms)


def cmd_approx(args) -> RunReport:
    if args.epsilon is None or args.epsilon <= 0:
        raise InputError("approx requires --epsilon > 0", reason="parse")
    tree, cost = _load(args)
    _require_graph_metric(tree, cost)
    before = tree.diameter()
    t0 = time.perf_counter()
    sol = approx_tree(tree, cost, args.epsilon)
    ms = (time.perf_counter() - t0) * 1e3
    return RunReport("approx", tree.n, before, sol, ms)


def cmd_gen(args) -> None:
    spec = args.cost_model
    kind = spec[0]
    const = float(spec[1]) if kind == "const" and len(spec) > 1 else 1.0
    dim = int(spec[1]) if kind == "coords" and len(spec) > 1 else 2
    tree, cost = gen_instance(
        args.n, args.model, _parse_range(args.weight_range), kind, args.seed,
        const=const, dim=dim,
    )
    write_tree(args.tree, tree)
    if kind in ("matrix", "coords"):
        if not args.cost_out:
            raise InputError(f"cost model {kind!r} needs --cost-out", reason="parse")
        write_cost(args.cost_out, cost)


def cmd_bench(args) -> None:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes:
        raise InputError("--sizes must list at least one size", reason="parse")
    print("n,mode,mean_ms")
    for n in sizes:
        tree, cost = gen_instance(
            n, "random-tree", (1, 100),
            "matrix" if args.mode == "general" else "coords", args.seed,
        )
        solve_tree(tree, cost, args.mode)  # warm-up: JIT compilation
        total = 0.0
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            solve_tree(tree, cost, args.mode)
            total += time.perf_counter() - t0
        print(f"{n},{args.mode},{_num(total / args.repeats * 1e3)}")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad range {text!r}, expected lo,hi", reason="parse") from exc
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="treeshortcut",
        description="Add one shortcut to an edge-weighted tree to minimize its diameter.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def io_flags(p, cost_required=True):
        p.add_argument("--tree", required=True, help="tree file (n, then 'u v weight' lines)")
        p.add_argument(
            "--cost",
            nargs="+",
            required=cost_required,
            metavar="SPEC",
            help="matrix FILE | coords FILE | const K | treedist",
        )

    p = sub.add_parser("solve", help="exact optimum")
    io_flags(p)
    p.add_argument("--mode", choices=("metric", "general", "brute"), default="metric")
    p.set_defaults(fn=cmd_solve, report=True)

    p = sub.add_parser("decide", help="any shortcut within a diameter budget")
    io_flags(p)
    p.add_argument("--lambda", dest="budget", type=float, help="diameter budget")
    p.set_defaults(fn=cmd_decide, report=True)

    p = sub.add_parser("approx", help="(1+epsilon)-approximate optimum")
    io_flags(p)
    p.add_argument("--epsilon", type=float)
    p.set_defaults(fn=cmd_approx, report=True)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--model", choices=("path", "caterpillar", "random-tree"), default="random-tree")
    p.add_argument("--weight-range", default="1,100")
    p.add_argument("--cost-model", nargs="+", default=["coords", "2"], metavar="SPEC")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tree", required=True, help="output tree file")
    p.add_argument("--cost-out", help="output cost file (matrix/coords models)")
    p.set_defaults(fn=cmd_gen, report=False)

    p = sub.add_parser("bench", help="timing table as CSV")
    p.add_argument("--sizes", required=True, help="comma-separated sizes")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--mode", choices=("metric", "general", "brute"), default="metric")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_bench, report=False)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MetricViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.report:
        print(out.to_json())
    return 0


if __name__ == "__main__":
    sys.exit(main())
