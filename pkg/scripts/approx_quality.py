#!/usr/bin/env python3
"""Measure the windowed approximation against the exact optimum.

For a corpus of metric-embedded instances, prints the worst and mean ratio
of approximate to optimal diameter per epsilon, plus solve-time comparisons.
"""

import argparse
import time

import numpy as np

import treeshortcut as ts


def embedded_instance(n, rng):
    while True:
        pts = rng.integers(0, 10001, size=(n, 2)).astype(float)
        if len({tuple(q) for q in pts}) == n:
            break
    edges = []
    for v in range(2, n + 1):
        host = int(rng.integers(1, v))
        c = float(np.sqrt(((pts[host - 1] - pts[v - 1]) ** 2).sum()))
        edges.append((host, v, c))
    return ts.build_tree(n, edges), ts.cost_coords(pts)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--epsilons", default="0.1,0.5,1.0")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    epsilons = [float(e) for e in args.epsilons.split(",")]

    rng = np.random.default_rng(args.seed)
    tree, cost = embedded_instance(64, rng)
    ts.solve_tree(tree, cost, "metric")  # jit warm-up

    ratios = {e: [] for e in epsilons}
    t_exact = t_apx = 0.0
    for _ in range(args.count):
        tree, cost = embedded_instance(args.n, rng)
        inst = ts.prepare_instance(tree, cost)
        t0 = time.perf_counter()
        exact = ts.solve(inst)
        t_exact += time.perf_counter() - t0
        for eps in epsilons:
            t0 = time.perf_counter()
            approx = ts.solve_approx(inst, eps)
            t_apx += time.perf_counter() - t0
            ratios[eps].append(approx.diameter / exact.diameter if exact.diameter else 1.0)

    print("epsilon,worst_ratio,mean_ratio,bound")
    for eps in epsilons:
        r = np.array(ratios[eps])
        print(f"{eps},{r.max():.6f},{r.mean():.6f},{1 + eps}")
    print(f"\nexact total {t_exact:.2f}s, approx total {t_apx:.2f}s over {args.count} instances")


if __name__ == "__main__":
    main()
