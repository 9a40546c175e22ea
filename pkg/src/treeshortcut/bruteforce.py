"""Exhaustive reference implementations: the ground truth the fast solvers
are validated against, and the CLI's ``--mode brute``."""

from __future__ import annotations

import numpy as np

from .costs import CostOracle
from .errors import InputError
from .instance import PathInstance, diameter_brute
from .solution import Solution
from .tree import Tree, tree_distances_from


def all_pairs_distances(tree: Tree) -> np.ndarray:
    """(n+1, n+1) padded matrix of tree distances."""
    n = tree.n
    out = np.zeros((n + 1, n + 1), np.float64)
    for v in range(1, n + 1):
        out[v] = tree_distances_from(tree, v)
    return out


def augmented_diameter(tree: Tree, u: int, v: int, shortcut_cost: float, dmat=None) -> float:
    """diam(tree + shortcut (u, v)) by explicit pair enumeration, O(n^2)."""
    if u == v:
        raise InputError("shortcut endpoints must differ", reason="pair")
    if not (1 <= u <= tree.n and 1 <= v <= tree.n):
        raise InputError("shortcut endpoint out of range", reason="pair")
    d = all_pairs_distances(tree) if dmat is None else dmat
    sub = d[1:, 1:]
    via = (sub[:, u - 1][:, None] + sub[v - 1, :][None, :]) + shortcut_cost
    via = np.minimum(via, via.T)
    return float(np.minimum(sub, via).max())


def best_shortcut_brute(tree: Tree, cost: CostOracle) -> Solution:
    """Exhaustive optimum over all vertex pairs; ties break towards the
    smallest (u, v). Intended for n <= 60."""
    d = all_pairs_distances(tree)
    cmat = cost.full_matrix(tree)
    best = Solution(1, 2, float(cmat[1, 2]), np.inf)
    sub = d[1:, 1:]
    for u in range(1, tree.n + 1):
        for v in range(u + 1, tree.n + 1):
            c = float(cmat[u, v])
            via = (sub[:, u - 1][:, None] + sub[v - 1, :][None, :]) + c
            dm = float(np.minimum(sub, np.minimum(via, via.T)).max())
            if dm < best.diameter:
                best = Solution(u, v, c, dm)
    return best


def best_pair_brute(inst: PathInstance) -> Solution:
    """Exhaustive optimum of the path abstraction over all index pairs."""
    best = Solution(1, 2, inst.cost_value(1, 2), np.inf)
    for i in range(1, inst.n + 1):
        for j in range(i + 1, inst.n + 1):
            dm = diameter_brute(inst, i, j)
            if dm < best.diameter:
                best = Solution(i, j, inst.cost_value(i, j), dm)
    return best


def closure_brute(tree: Tree, path: np.ndarray, cost: CostOracle) -> np.ndarray:
    """Definitional detour-closure restricted to path pairs.

    closure(i, j) = min over vertex pairs (a, b), a != b, of
    d(path_i, a) + c(a, b) + d(b, path_j); returned as a padded
    (N+1, N+1) symmetric matrix over path positions.
    """
    d = all_pairs_distances(tree)
    cmat = cost.full_matrix(tree).copy()
    np.fill_diagonal(cmat, np.inf)  # a == b is not a shortcut
    npath = path.shape[0] - 1
    targets = np.asarray(path[1:], np.int64)
    # two min-plus folds keep this at O(n^3) rather than O(n^4)
    to_t = (cmat[1:, 1:, None] + d[1:, targets][None, :, :]).min(axis=1)  # (a, t)
    from_s = d[targets][:, 1:]  # (s, a)
    vals = (from_s[:, :, None] + to_t[None, :, :]).min(axis=1)  # (s, t)
    out = np.full((npath + 1, npath + 1), np.inf)
    out[1:, 1:] = vals
    return out


def path_diameters_brute(inst: PathInstance) -> np.ndarray:
    """Matrix of diameter_brute over all pairs (test helper, O(N^4))."""
    out = np.full((inst.n + 1, inst.n + 1), np.nan)
    for i in range(1, inst.n + 1):
        for j in range(i + 1, inst.n + 1):
            out[i, j] = diameter_brute(inst, i, j)
    return out


def _pair_cost_matrix(inst: PathInstance) -> np.ndarray:
    from . import _kernels

    n = inst.n
    ii, jj = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    code, const, mat, coords = inst.cost.args()
    flat = _kernels.cost_values(
        inst.prefix, code, const, mat, coords,
        ii.ravel().astype(np.int64), jj.ravel().astype(np.int64),
    )
    return flat.reshape(n, n)


def diameter_brute_all_pairs(inst: PathInstance) -> np.ndarray:
    """Definitional augmented diameters for every pair at once.

    Same quantity as :func:`treeshortcut.instance.diameter_brute`, evaluated
    with array arithmetic (cost still added after the exact integer part, so
    values agree bitwise). Returned padded; entries outside i < j are nan.
    """
    n = inst.n
    p = inst.prefix[1:]
    w = inst.weights[1:]
    cmat = _pair_cost_matrix(inst)
    gaps = np.abs(p[:, None] - p[None, :])  # d(a, b)
    out = np.full((n + 1, n + 1), np.nan)
    wsum = w[:, None] + w[None, :]
    iu = np.triu_indices(n, 1)
    direct = gaps + wsum
    for i in range(1, n + 1):
        di = gaps[i - 1]
        for j in range(i + 1, n + 1):
            via1 = (di[:, None] + gaps[j - 1][None, :] + wsum) + cmat[i - 1, j - 1]
            via2 = (gaps[j - 1][:, None] + di[None, :] + wsum) + cmat[i - 1, j - 1]
            best = np.minimum(direct, np.minimum(via1, via2))
            out[i, j] = best[iu].max()
    return out


def components_brute_all_pairs(inst: PathInstance):
    """(ends, left, right, cycle) matrices over all pairs, definitional.

    ends is capped by the path length; empty cycle ranges give -inf.
    """
    n = inst.n
    p = inst.prefix[1:]
    rel = inst.relaxed[1:]
    total = float(inst.prefix[n])
    cmat = _pair_cost_matrix(inst)
    gaps = np.abs(p[:, None] - p[None, :])
    shape = (n + 1, n + 1)
    ends = np.full(shape, np.nan)
    left = np.full(shape, np.nan)
    right = np.full(shape, np.nan)
    cycle = np.full(shape, np.nan)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            c = cmat[i - 1, j - 1]
            ends[i, j] = min((p[i - 1] + (total - p[j - 1])) + c, total)
            hs = np.arange(i, j)
            lt = np.minimum(
                p[hs - 1] + rel[hs - 1],
                (p[i - 1] + (p[j - 1] - p[hs - 1]) + rel[hs - 1]) + c,
            )
            left[i, j] = lt.max()
            ks = np.arange(i + 1, j + 1)
            rt = np.minimum(
                (total - p[ks - 1]) + rel[ks - 1],
                ((total - p[j - 1]) + (p[ks - 1] - p[i - 1]) + rel[ks - 1]) + c,
            )
            right[i, j] = rt.max()
            if j - i >= 3:
                ks = np.arange(i + 1, j)  # interior, 1-based
                relsum = rel[ks - 1][:, None] + rel[ks - 1][None, :]
                direct = gaps[np.ix_(ks - 1, ks - 1)] + relsum
                route = ((p[ks - 1] - p[i - 1])[:, None] + (p[j - 1] - p[ks - 1])[None, :] + relsum) + c
                val = np.minimum(direct, route)
                iu = np.triu_indices(ks.size, 1)
                cycle[i, j] = val[iu].max()
            else:
                cycle[i, j] = -np.inf
    return ends, left, right, cycle
