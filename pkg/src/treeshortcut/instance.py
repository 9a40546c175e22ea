"""Node-weighted path instances and the diameter component evaluators.

A path instance abstracts the augmentation problem onto a diametral path:
prefix distances, per-vertex hanging weights, their distance-relaxed form,
and a cost payload over path positions. The weighted diameter after adding a
shortcut (i, j) decomposes into four monotone terms:

  ends   both endpoints replaced by the path ends (through the shortcut),
  left   path start to a cycle vertex,
  right  cycle vertex to path end,
  cycle  both endpoints strictly inside the cycle.

Their maximum equals the exhaustive weighted diameter; the ends term is
capped by the full path length since the direct route always remains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .costs import CostOracle, PathCost
from .errors import InputError
from .tree import Tree, TreeDecomposition

NEG_INF = float("-inf")


@dataclass(frozen=True, eq=False)
class PathInstance:
    """Immutable node-weighted path with a shortcut-cost payload.

    Arrays are 1-based with a zero pad at slot 0. ``vertex_ids`` maps path
    positions back to the originating tree's vertex ids (identity for
    synthetic instances).
    """

    n: int
    prefix: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    relaxed: np.ndarray = field(repr=False)
    cost: PathCost = field(repr=False)
    vertex_ids: np.ndarray = field(repr=False)

    @property
    def delta(self) -> np.ndarray:
        """Edge weights, delta[i] spans positions i..i+1 (slot 0 unused)."""
        d = np.zeros(self.n, np.float64)
        d[1:] = np.diff(self.prefix[1:])
        return d

    @property
    def length(self) -> float:
        return float(self.prefix[self.n])

    def dist(self, i: int, j: int) -> float:
        return float(abs(self.prefix[j] - self.prefix[i]))

    def cost_value(self, i: int, j: int) -> float:
        code, const, mat, coords = self.cost.args()
        return float(
            _kernels.cost_values(
                self.prefix, code, const, mat, coords,
                np.array([i], np.int64), np.array([j], np.int64),
            )[0]
        )

    def _check_pair(self, i: int, j: int) -> None:
        if not (1 <= i < j <= self.n):
            raise InputError(f"need 1 <= i < j <= {self.n}, got ({i},{j})", reason="pair")


def relax_weights(prefix: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """Distance-relaxed weights: out[i] = max_j (weights[j] - d(i, j)).

    Two linear sweeps. The result dominates ``weights`` pointwise and changes
    by at most the edge weight between neighbours.
    """
    return _kernels.relax_sweep(
        np.asarray(prefix, np.float64), np.asarray(weights, np.float64)
    )


def make_path_instance(delta, weights, cost: PathCost, vertex_ids=None) -> PathInstance:
    """Assemble and validate a PathInstance from plain 0-based sequences."""
    delta = np.asarray(delta, np.float64)
    weights = np.asarray(weights, np.float64)
    n = weights.shape[0]
    if n < 2:
        raise InputError("a path instance needs at least 2 vertices", reason="instance")
    if delta.shape[0] != n - 1:
        raise InputError("need exactly n-1 edge weights", reason="instance")
    if not (delta > 0).all():
        raise InputError("edge weights must be positive", reason="instance")
    prefix = np.zeros(n + 1, np.float64)
    prefix[2:] = np.cumsum(delta)
    w = np.zeros(n + 1, np.float64)
    w[1:] = weights
    if w[1] != 0.0 or w[n] != 0.0:
        raise InputError("endpoint weights must be zero", reason="instance")
    span = np.minimum(prefix[1:], prefix[n] - prefix[1:])
    if (w[1:] < 0).any() or (w[1:] > span + 1e-12).any():
        raise InputError(
            "weights must satisfy 0 <= w[i] <= min(d(start,i), d(i,end))",
            reason="instance",
        )
    if vertex_ids is None:
        ids = np.arange(n + 1, dtype=np.int64)
        ids[0] = 0
    else:
        ids = np.asarray(vertex_ids, np.int64)
    relaxed = relax_weights(prefix, w)
    return PathInstance(n=n, prefix=prefix, weights=w, relaxed=relaxed, cost=cost, vertex_ids=ids)


def induce_instance(tree: Tree, decomp: TreeDecomposition, cost: CostOracle) -> PathInstance:
    """Project a tree instance onto its diametral path.

    Hanging weights become node weights; the cost payload is re-indexed to
    path positions. Adding a path shortcut to the projection changes the
    weighted diameter exactly as adding it to the tree does.
    """
    path = decomp.path
    npath = decomp.length
    if decomp.subtree_of[1:].min() < 1 or int(decomp.subtree_of[1:].max()) > npath:
        raise InputError("decomposition does not cover the tree", reason="decomposition")
    dist = tree.distances_from(int(path[1]))
    prefix = np.zeros(npath + 1, np.float64)
    prefix[1:] = dist[path[1:]]
    w = np.zeros(npath + 1, np.float64)
    w[1:] = decomp.hang_weight[1:]
    relaxed = relax_weights(prefix, w)
    return PathInstance(
        n=npath,
        prefix=prefix,
        weights=w,
        relaxed=relaxed,
        cost=cost.restrict_to_path(path),
        vertex_ids=path.copy(),
    )


# ---------------------------------------------------------------------------
# component evaluators


@dataclass(frozen=True)
class ComponentValues:
    ends: float
    left: float
    right: float
    cycle: float

    @property
    def diameter(self) -> float:
        return max(self.ends, self.left, self.right, self.cycle)


def end_terms(inst: PathInstance, i: int, j: int) -> tuple[float, float, float]:
    """(ends, left, right) for shortcut (i, j); left/right via binary search.

    At the crossover boundaries the left/right values may exceed their
    definitional maxima, but never beyond the ends term, so max-composition
    with ``ends`` is exact.
    """
    inst._check_pair(i, j)
    code, const, mat, coords = inst.cost.args()
    e, l, r = _kernels.end_terms(
        inst.prefix, inst.relaxed, code, const, mat, coords,
        np.array([i], np.int64), np.array([j], np.int64),
    )
    return float(e[0]), float(l[0]), float(r[0])


def cycle_term_brute(inst: PathInstance, i: int, j: int) -> float:
    """Definitional within-cycle maximum; -inf when the cycle has no
    interior pair. Quadratic reference implementation."""
    inst._check_pair(i, j)
    p, rel = inst.prefix, inst.relaxed
    c = inst.cost_value(i, j)
    best = NEG_INF
    for k in range(i + 1, j - 1):
        for h in range(k + 1, j):
            direct = (p[h] - p[k]) + rel[k] + rel[h]
            via = ((p[k] - p[i]) + (p[j] - p[h]) + rel[k] + rel[h]) + c
            best = max(best, min(direct, via))
    return best


def components_brute(inst: PathInstance, i: int, j: int) -> ComponentValues:
    """All four components by definitional scans (quadratic; test oracle)."""
    inst._check_pair(i, j)
    p, rel = inst.prefix, inst.relaxed
    n = inst.n
    c = inst.cost_value(i, j)
    ends = min((p[i] + (p[n] - p[j])) + c, p[n])
    left = NEG_INF
    for h in range(i, j):
        left = max(left, min(p[h] + rel[h], (p[i] + (p[j] - p[h]) + rel[h]) + c))
    right = NEG_INF
    for k in range(i + 1, j + 1):
        right = max(
            right,
            min((p[n] - p[k]) + rel[k], ((p[n] - p[j]) + (p[k] - p[i]) + rel[k]) + c),
        )
    return ComponentValues(ends=ends, left=left, right=right, cycle=cycle_term_brute(inst, i, j))


def diameter_brute(inst: PathInstance, i: int, j: int) -> float:
    """Exhaustive weighted diameter after adding shortcut (i, j): the max
    over all vertex pairs of w(k) + shortest-route(k, h) + w(h)."""
    inst._check_pair(i, j)
    p, w = inst.prefix, inst.weights
    c = inst.cost_value(i, j)
    best = NEG_INF
    for k in range(1, inst.n + 1):
        for h in range(k + 1, inst.n + 1):
            ww = w[k] + w[h]
            direct = (p[h] - p[k]) + ww
            via1 = (abs(p[i] - p[k]) + abs(p[j] - p[h]) + ww) + c
            via2 = (abs(p[j] - p[k]) + abs(p[i] - p[h]) + ww) + c
            best = max(best, min(direct, via1, via2))
    return best


def diameter_after(inst: PathInstance, i: int, j: int) -> float:
    """Exact augmented weighted diameter for one shortcut, in linear time."""
    inst._check_pair(i, j)
    code, const, mat, coords = inst.cost.args()
    return float(
        _kernels.diameter_linear(inst.prefix, inst.relaxed, code, const, mat, coords, i, j)
    )


def restrict_instance(inst: PathInstance, positions: np.ndarray) -> PathInstance:
    """Sub-instance on a subsequence of positions (1-based array incl. pad).

    Node weights of the restriction are the *relaxed* weights of the parent,
    which keeps every solver precondition valid: relaxation is idempotent and
    the endpoint values vanish when positions include both path ends.
    """
    idx = np.asarray(positions, np.int64)
    k = idx.shape[0] - 1
    prefix = np.zeros(k + 1, np.float64)
    prefix[1:] = inst.prefix[idx[1:]] - inst.prefix[idx[1]]
    w = np.zeros(k + 1, np.float64)
    w[1:] = inst.relaxed[idx[1:]]
    relaxed = relax_weights(prefix, w)
    return PathInstance(
        n=k,
        prefix=prefix,
        weights=w,
        relaxed=relaxed,
        cost=inst.cost.restrict(idx),
        vertex_ids=inst.vertex_ids[idx].copy(),
    )
