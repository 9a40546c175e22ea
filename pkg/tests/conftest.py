"""Shared instance generators and fixtures.

Two cost families matter for coverage:

* graph-metric family: costs satisfying c(u,v) <= c(u,z) + d(z,v); what the
  fast exact pipeline requires. Arbitrary costs closed w.r.t. tree distances
  land here, as do constants and tree distances.
* embedded family: costs that agree with edge weights on tree edges (points
  with edge weights equal to endpoint distances, metric tables used as
  weights). This is the setting in which the path length is provably within
  3x of the optimum and the windowed approximation keeps its ratio.
"""

import numpy as np
import pytest

import treeshortcut as ts
from treeshortcut.bruteforce import all_pairs_distances

MODELS = ("path", "caterpillar", "random-tree")


def shape_edges(n, model, rng):
    if model == "path":
        return [(v - 1, v) for v in range(2, n + 1)]
    if model == "caterpillar":
        spine = max(2, (n + 1) // 2)
        return [(v - 1, v) for v in range(2, spine + 1)] + [
            (1 + (v - spine - 1) % spine, v) for v in range(spine + 1, n + 1)
        ]
    return [(int(rng.integers(1, v)), v) for v in range(2, n + 1)]


def random_tree(n, model, rng, lo=1, hi=9):
    w = rng.integers(lo, hi + 1, size=n - 1)
    edges = [(u, v, float(w[k])) for k, (u, v) in enumerate(shape_edges(n, model, rng))]
    return ts.build_tree(n, edges)


def euclid_embedded(n, model, rng, grid=71, exact=False):
    """Tree + point costs; edge weights dominate (or equal) endpoint costs."""
    while True:
        pts = rng.integers(0, grid, size=(n, 2)).astype(float)
        if len({tuple(q) for q in pts}) == n:
            break
    edges = []
    for u, v in shape_edges(n, model, rng):
        c = float(np.sqrt(((pts[u - 1] - pts[v - 1]) ** 2).sum()))
        edges.append((u, v, c if exact else max(1.0, float(np.ceil(c)))))
    return ts.build_tree(n, edges), ts.cost_coords(pts)


def metric_matrix_embedded(n, model, rng, hi=40):
    """Integer metric table; tree edges weighted by the same table."""
    raw = rng.integers(1, hi, size=(n, n)).astype(float)
    m = np.minimum(raw, raw.T)
    np.fill_diagonal(m, 0.0)
    for k in range(n):
        m = np.minimum(m, m[:, k][:, None] + m[k, :][None, :])
    edges = [(u, v, float(m[u - 1, v - 1])) for u, v in shape_edges(n, model, rng)]
    return ts.build_tree(n, edges), ts.cost_matrix(m, declared_class="metric")


def graph_metric_matrix(tree, rng, hi=30):
    """Arbitrary symmetric costs closed w.r.t. tree distances."""
    n = tree.n
    d = all_pairs_distances(tree)[1:, 1:]
    c = rng.integers(0, hi, size=(n, n)).astype(float)
    c = np.minimum(c, c.T)
    np.fill_diagonal(c, np.inf)
    t1 = (c[:, :, None] + d[None, :, :]).min(axis=1)
    out = (d[:, :, None] + t1[None, :, :]).min(axis=1)
    out = np.minimum(out, out.T)
    np.fill_diagonal(out, 0.0)
    return ts.cost_matrix(out, declared_class="graph-metric")


def general_matrix(n, rng, hi=50):
    raw = rng.integers(0, hi, size=(n, n)).astype(float)
    raw = np.minimum(raw, raw.T)
    np.fill_diagonal(raw, 0.0)
    return ts.cost_matrix(raw, declared_class="general")


def graph_metric_corpus(count, seed, nmax=12, nmin=2):
    """(tree, cost) pairs valid for the exact metric pipeline."""
    rng = np.random.default_rng(seed)
    out = []
    for it in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        model = MODELS[it % 3]
        kind = it % 5
        if kind == 0:
            tree = random_tree(n, model, rng)
            pair = (tree, ts.cost_const(float(rng.integers(0, 12))))
        elif kind == 1:
            tree = random_tree(n, model, rng)
            pair = (tree, ts.cost_treedist(tree))
        elif kind == 2:
            pair = euclid_embedded(n, model, rng)
        elif kind == 3:
            pair = metric_matrix_embedded(n, model, rng)
        else:
            tree = random_tree(n, model, rng)
            pair = (tree, graph_metric_matrix(tree, rng))
        out.append(pair)
    return out


def embedded_corpus(count, seed, nmax=12, nmin=2):
    """(tree, cost) pairs where costs agree with edge weights on edges."""
    rng = np.random.default_rng(seed)
    out = []
    for it in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        model = MODELS[it % 3]
        kind = it % 4
        if kind == 0:
            k = float(rng.integers(1, 8))
            edges = [(u, v, k) for u, v in shape_edges(n, model, rng)]
            out.append((ts.build_tree(n, edges), ts.cost_const(k)))
        elif kind == 1:
            out.append(euclid_embedded(n, model, rng, exact=True))
        elif kind == 2:
            out.append(metric_matrix_embedded(n, model, rng))
        else:
            tree = random_tree(n, model, rng)
            out.append((tree, ts.cost_treedist(tree)))
    return out


def random_path_instance(rng, nmax=10, nmin=2):
    """A synthetic node-weighted path with a graph-metric matrix cost."""
    n = int(rng.integers(nmin, nmax + 1))
    delta = rng.integers(1, 8, size=n - 1).astype(float)
    prefix = np.concatenate(([0.0], np.cumsum(delta)))
    span = np.minimum(prefix, prefix[-1] - prefix)
    w = np.array([float(rng.integers(0, int(s) + 1)) for s in span])
    w[0] = w[-1] = 0.0
    c = rng.integers(0, 25, size=(n, n)).astype(float)
    c = np.minimum(c, c.T)
    np.fill_diagonal(c, np.inf)
    d = np.abs(prefix[:, None] - prefix[None, :])
    t1 = (c[:, :, None] + d[None, :, :]).min(axis=1)
    closed = (d[:, :, None] + t1[None, :, :]).min(axis=1)
    closed = np.minimum(closed, closed.T)
    np.fill_diagonal(closed, 0.0)
    padded = np.zeros((n + 1, n + 1))
    padded[1:, 1:] = closed
    from treeshortcut.costs import PathCost
    from treeshortcut import _kernels

    return ts.make_path_instance(delta, w, PathCost(_kernels.COST_MATRIX, mat=padded))


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    """Compile the jit kernels once before any timing-sensitive test."""
    tree = ts.build_tree(6, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 2), (2, 6, 1)])
    ts.solve_tree(tree, ts.cost_const(1.0), "metric")
    ts.solve_tree(tree, ts.cost_treedist(tree), "brute")
    ts.approx_tree(tree, ts.cost_const(1.0), 0.5)
    yield


def p5_instance(cost_value=1.0):
    tree = ts.build_tree(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1)])
    return ts.prepare_instance(tree, ts.cost_const(cost_value))
