"""General-weight pipeline: detour-closure of the cost over path pairs in
O(n^2), then the exact path solver on the closed instance.

The closure of a cost c maps each path pair (i, j) to the cheapest way of
simulating a shortcut between them: walk to any vertex a, take the shortcut
(a, b), walk back. The closed cost satisfies the graph-triangle inequality
along the path and induces the same optimal diameter as c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .costs import CostOracle, PathCost
from .errors import InternalError
from .instance import PathInstance, relax_weights
from .solution import Solution
from .solver import solve as solve_path
from .tree import Tree, TreeDecomposition, diametral_path, hanging_weights


@dataclass(frozen=True)
class ClosureTable:
    """The three passes of the closure over path positions (padded, 1-based).

    ``anchored``: cheapest detour whose walk stays inside the two hanging
    components. ``forward``: anchors relaxed leftward. ``closed``: the full
    closure, anchors anywhere.
    """

    anchored: np.ndarray = field(repr=False)
    forward: np.ndarray = field(repr=False)
    closed: np.ndarray = field(repr=False)

    def value(self, i: int, j: int) -> float:
        a, b = (i, j) if i < j else (j, i)
        return float(self.closed[a, b])


def path_closure(tree: Tree, decomp: TreeDecomposition, cost: CostOracle) -> ClosureTable:
    """Close the cost over diametral-path pairs in O(n^2) time and space."""
    n = tree.n
    npath = decomp.length
    p = np.zeros(npath + 1, np.float64)
    dist = tree.distances_from(int(decomp.path[1]))
    p[1:] = dist[decomp.path[1:]]

    cmat = cost.full_matrix(tree)
    anchor = decomp.anchor_dist
    detour = np.add.outer(anchor[1:], anchor[1:]) + cmat[1:, 1:]
    np.fill_diagonal(detour, np.inf)  # a shortcut needs two distinct endpoints

    comp = decomp.subtree_of[1:]
    order = np.argsort(comp, kind="stable")
    sizes = np.bincount(comp, minlength=npath + 1)[1:]
    starts = np.zeros(npath, np.int64)
    starts[1:] = np.cumsum(sizes)[:-1]
    block = detour[np.ix_(order, order)]
    rowmin = np.minimum.reduceat(block, starts, axis=0)
    anchored = np.full((npath + 1, npath + 1), np.inf)
    # the diagonal stays: both anchors may sit in one hanging component
    anchored[1:, 1:] = np.minimum.reduceat(rowmin, starts, axis=1)

    # leftward pass: anchors at or before (i, j), cheapest detour for (i, j)
    forward = np.full_like(anchored, np.inf)
    for i in range(1, npath + 1):
        t = anchored[i]
        if i > 1:
            t = np.minimum(t, forward[i - 1] + (p[i] - p[i - 1]))
        forward[i] = np.minimum.accumulate(t - p) + p

    # rightward pass: fold in anchors past (i, j)
    closed = forward.copy()
    for i in range(npath - 1, 0, -1):
        t = np.minimum(forward[i], closed[i + 1] + (p[i + 1] - p[i]))
        closed[i] = _suffix_min(t + p) - p

    for m in (forward, closed):
        m[0, :] = np.inf
        m[:, 0] = np.inf
    return ClosureTable(anchored=anchored, forward=forward, closed=closed)


def _suffix_min(a: np.ndarray) -> np.ndarray:
    return np.minimum.accumulate(a[::-1])[::-1]


def induce_closed_instance(tree: Tree, decomp: TreeDecomposition, table: ClosureTable) -> PathInstance:
    npath = decomp.length
    dist = tree.distances_from(int(decomp.path[1]))
    prefix = np.zeros(npath + 1, np.float64)
    prefix[1:] = dist[decomp.path[1:]]
    w = np.zeros(npath + 1, np.float64)
    w[1:] = decomp.hang_weight[1:]
    mat = table.closed.copy()
    iu = np.triu_indices(npath + 1, 1)
    mat[(iu[1], iu[0])] = mat[iu]  # symmetric view for the kernels
    np.fill_diagonal(mat, 0.0)
    mat[0, :] = 0.0
    mat[:, 0] = 0.0
    return PathInstance(
        n=npath,
        prefix=prefix,
        weights=w,
        relaxed=relax_weights(prefix, w),
        cost=PathCost(_kernels.COST_MATRIX, mat=mat),
        vertex_ids=decomp.path.copy(),
    )


def solve_general(tree: Tree, cost: CostOracle, with_detail: bool = False):
    """Optimal shortcut for arbitrary nonnegative symmetric costs, O(n^2).

    Returns the pair (as tree vertex ids) optimal under the closed cost; its
    diameter equals the true optimum under the original cost. The reported
    shortcut cost is the closed (effective) cost: the walk-and-shortcut
    detour realizing it is recoverable via :func:`realize_shortcut`.
    """
    decomp = hanging_weights(tree, diametral_path(tree))
    table = path_closure(tree, decomp, cost)
    inst = induce_closed_instance(tree, decomp, table)
    sol = solve_path(inst)
    u = int(decomp.path[sol.u])
    v = int(decomp.path[sol.v])
    mapped = Solution(min(u, v), max(u, v), sol.shortcut_cost, sol.diameter)
    if with_detail:
        return mapped, (decomp, table, inst, sol)
    return mapped


def realize_shortcut(
    tree: Tree,
    decomp: TreeDecomposition,
    cost: CostOracle,
    table: ClosureTable,
    i: int,
    j: int,
) -> tuple[int, int]:
    """Recover tree vertices (a, b) whose shortcut realizes closed(i, j).

    Debug utility. The closed cost factors as the best anchored detour plus
    the walks to its two anchor positions; this scans anchor pairs for the
    minimizer and then the two hanging components for the witnessing
    vertices. Exact on integer-weight instances; a relative tolerance covers
    accumulated float instances.
    """

    def close_enough(x, y):
        return x == y or math.isclose(x, y, rel_tol=1e-9, abs_tol=1e-12)

    if i > j:
        i, j = j, i
    npath = decomp.length
    p = np.zeros(npath + 1, np.float64)
    dist = tree.distances_from(int(decomp.path[1]))
    p[1:] = dist[decomp.path[1:]]

    target = table.closed[i, j]
    totals = (np.abs(p[1:] - p[i])[:, None] + np.abs(p[1:] - p[j])[None, :]) + table.anchored[1:, 1:]
    flat = int(np.argmin(totals))
    ka, kb = flat // npath + 1, flat % npath + 1
    if not close_enough(float(totals.min()), target):
        raise InternalError("no anchor pair reproduces the closed cost")

    cmat = cost.full_matrix(tree)
    members_a = np.nonzero(decomp.subtree_of[1:] == ka)[0] + 1
    members_b = np.nonzero(decomp.subtree_of[1:] == kb)[0] + 1
    anchor_part = float(table.anchored[ka, kb])
    for u in members_a:
        for v in members_b:
            if u == v:
                continue
            val = (decomp.anchor_dist[u] + decomp.anchor_dist[v]) + cmat[u, v]
            if close_enough(val, anchor_part):
                return int(u), int(v)
    raise InternalError("no anchored pair realizes the closed cost")
