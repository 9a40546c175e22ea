#!/usr/bin/env python3
"""Timing study across solver modes and sizes.

Produces one CSV block per mode (columns: n, mode, mean_ms, doubling ratio)
and, for the metric solver, the probe counts against the logarithmic budget.

Usage:
    python scripts/scaling_study.py                # default sizes
    python scripts/scaling_study.py --metric-max 200000 --repeats 5
"""

import argparse
import time

import numpy as np

import treeshortcut as ts
from treeshortcut.decision import ProbeCounter


def euclid_path(n, rng):
    while True:
        pts = rng.integers(0, 100001, size=(n, 2)).astype(float)
        gaps = np.sqrt(((pts[1:] - pts[:-1]) ** 2).sum(1))
        if (gaps > 0).all():
            break
    edges = [(i, i + 1, float(np.ceil(gaps[i - 1]))) for i in range(1, n)]
    return ts.build_tree(n, edges), ts.cost_coords(pts)


def run_metric(sizes, repeats, seed):
    rng = np.random.default_rng(seed)
    print("n,mode,mean_ms,probes,probe_budget,ratio")
    prev = None
    for n in sizes:
        tree, cost = euclid_path(n, rng)
        times = []
        probes = 0
        for _ in range(repeats):
            counter = ProbeCounter()
            t0 = time.perf_counter()
            inst = ts.prepare_instance(tree, cost)
            ts.solve(inst, counter=counter)
            times.append(time.perf_counter() - t0)
            probes = counter.probes
        mean = float(np.mean(times)) * 1e3
        ratio = "" if prev is None else f"{mean / prev:.2f}"
        print(f"{n},metric,{mean:.2f},{probes},{int(40 * np.log2(n))},{ratio}")
        prev = mean


def run_general(sizes, repeats, seed):
    rng = np.random.default_rng(seed)
    print("n,mode,mean_ms,ratio")
    prev = None
    for n in sizes:
        w = rng.integers(1, 101, size=n - 1)
        tree = ts.build_tree(n, [(i, i + 1, float(w[i - 1])) for i in range(1, n)])
        raw = rng.integers(1, 200, size=(n, n)).astype(float)
        raw = np.minimum(raw, raw.T)
        np.fill_diagonal(raw, 0.0)
        cost = ts.cost_matrix(raw, declared_class="general")
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            ts.solve_general(tree, cost)
            times.append(time.perf_counter() - t0)
        mean = float(np.mean(times)) * 1e3
        ratio = "" if prev is None else f"{mean / prev:.2f}"
        print(f"{n},general,{mean:.2f},{ratio}")
        prev = mean


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--metric-max", type=int, default=100_000)
    ap.add_argument("--general-max", type=int, default=3000)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    # warm the jit kernels outside the timed region
    tree, cost = euclid_path(64, np.random.default_rng(1))
    ts.solve_tree(tree, cost, "metric")

    sizes = [args.metric_max // 4, args.metric_max // 2, args.metric_max]
    run_metric(sizes, args.repeats, args.seed)
    print()
    sizes = [args.general_max // 4, args.general_max // 2, args.general_max]
    run_general(sizes, args.repeats, args.seed)


if __name__ == "__main__":
    main()
