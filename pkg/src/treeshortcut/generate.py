"""Seeded random instance generation for the CLI, tests, and benchmarks."""

from __future__ import annotations

import numpy as np

from .costs import CostOracle, cost_const, cost_coords, cost_matrix, cost_treedist
from .errors import InputError
from .tree import Tree, build_tree

TREE_MODELS = ("path", "caterpillar", "random-tree")


def gen_tree(n: int, model: str, weight_range: tuple[int, int], seed: int) -> Tree:
    """Deterministic random tree; integer weights drawn from weight_range."""
    if model not in TREE_MODELS:
        raise InputError(f"unknown tree model {model!r}", reason="model")
    if n < 2:
        raise InputError("need n >= 2", reason="model")
    lo, hi = int(weight_range[0]), int(weight_range[1])
    if lo < 1 or hi < lo:
        raise InputError("weight range must satisfy 1 <= lo <= hi", reason="model")
    rng = np.random.default_rng(seed)
    weights = rng.integers(lo, hi + 1, size=n - 1)
    edges = []
    if model == "path":
        for v in range(2, n + 1):
            edges.append((v - 1, v, float(weights[v - 2])))
    elif model == "caterpillar":
        spine = max(2, (n + 1) // 2)
        for v in range(2, spine + 1):
            edges.append((v - 1, v, float(weights[v - 2])))
        for v in range(spine + 1, n + 1):
            host = 1 + (v - spine - 1) % spine
            edges.append((host, v, float(weights[v - 2])))
    else:  # uniform attachment
        for v in range(2, n + 1):
            host = int(rng.integers(1, v))
            edges.append((host, v, float(weights[v - 2])))
    return build_tree(n, edges)


def gen_cost(tree: Tree, model: str, seed: int, const: float = 1.0, dim: int = 2) -> CostOracle:
    """Deterministic cost oracle over the tree's vertices.

    const/treedist need no randomness; coords samples integer grid points;
    matrix samples arbitrary symmetric integer costs (general class).
    """
    rng = np.random.default_rng(seed + 1)
    if model == "const":
        return cost_const(const)
    if model == "treedist":
        return cost_treedist(tree)
    if model == "coords":
        pts = rng.integers(0, 101, size=(tree.n, dim)).astype(np.float64)
        return cost_coords(pts)
    if model == "matrix":
        raw = rng.integers(1, 201, size=(tree.n, tree.n)).astype(np.float64)
        sym = np.minimum(raw, raw.T)
        np.fill_diagonal(sym, 0.0)
        return cost_matrix(sym, declared_class="general")
    raise InputError(f"unknown cost model {model!r}", reason="model")


def gen_instance(
    n: int,
    model: str,
    weight_range: tuple[int, int],
    cost_model: str,
    seed: int,
    const: float = 1.0,
    dim: int = 2,
) -> tuple[Tree, CostOracle]:
    """Tree and cost generated coherently.

    For the coords model the edge weights are re-derived as ceilings of the
    endpoint distances so the pair satisfies the graph-triangle inequality
    and stays valid for the metric pipeline; other models keep the sampled
    integer weights.
    """
    tree = gen_tree(n, model, weight_range, seed)
    cost = gen_cost(tree, cost_model, seed, const=const, dim=dim)
    if cost_model == "coords":
        full = cost.full_matrix(tree)
        edges = [
            (u, v, max(1.0, float(np.ceil(full[u, v])))) for u, v, _ in tree.edges
        ]
        tree = build_tree(n, edges)
    return tree, cost
