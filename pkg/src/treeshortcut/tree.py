"""Edge-weighted trees: validation, distances, diametral paths, hanging parts.

Vertices are 1-based contiguous integers everywhere. All structures are
immutable after construction and all operations are pure, so instances can be
shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InputError

Edge = tuple[int, int, float]


@dataclass(frozen=True, eq=False)
class Tree:
    """A validated edge-weighted tree with a CSR adjacency view."""

    n: int
    edges: tuple[Edge, ...]
    adj_start: np.ndarray = field(repr=False)
    adj_to: np.ndarray = field(repr=False)
    adj_weight: np.ndarray = field(repr=False)

    def distances_from(self, root: int) -> np.ndarray:
        return tree_distances_from(self, root)

    def diameter(self) -> float:
        path = diametral_path(self)
        dist = tree_distances_from(self, int(path[1]))
        return float(dist[path[-1]])


def build_tree(n: int, edges) -> Tree:
    """Validate ``n`` vertices and ``n-1`` weighted edges into a Tree.

    Raises InputError with a reason code on self-loops, repeated/cyclic edges,
    non-positive weights, vertex ids out of range, or disconnection.
    """
    if n < 2:
        raise InputError(f"need at least 2 vertices, got {n}", reason="vertex-count")
    edges = [(int(u), int(v), float(w)) for u, v, w in edges]
    if len(edges) != n - 1:
        raise InputError(
            f"a tree on {n} vertices needs {n - 1} edges, got {len(edges)}",
            reason="edge-count",
        )
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, w in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"vertex id out of range in edge ({u},{v})", reason="vertex-range")
        if u == v:
            raise InputError(f"self-loop at vertex {u}", reason="self-loop")
        if not (w > 0) or not np.isfinite(w):
            raise InputError(f"edge ({u},{v}) has non-positive weight {w}", reason="nonpositive-weight")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InputError(f"edge ({u},{v}) closes a cycle", reason="cycle")
        parent[ru] = rv
    # n-1 cycle-free edges on n vertices are necessarily connected

    deg = np.zeros(n + 2, np.int64)
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    adj_start = np.zeros(n + 2, np.int64)
    adj_start[1:] = np.cumsum(deg[:-1])
    fill = adj_start.copy()
    adj_to = np.zeros(2 * (n - 1), np.int64)
    adj_weight = np.zeros(2 * (n - 1), np.float64)
    for u, v, w in edges:
        adj_to[fill[u]] = v
        adj_weight[fill[u]] = w
        fill[u] += 1
        adj_to[fill[v]] = u
        adj_weight[fill[v]] = w
        fill[v] += 1
    return Tree(n=n, edges=tuple(edges), adj_start=adj_start, adj_to=adj_to, adj_weight=adj_weight)


def tree_distances_from(tree: Tree, root: int) -> np.ndarray:
    """Distances from ``root`` to every vertex (1-based array, slot 0 unused)."""
    if not (1 <= root <= tree.n):
        raise InputError(f"vertex {root} out of range", reason="vertex-range")
    dist, _ = _kernels.tree_sweep(tree.n, tree.adj_start, tree.adj_to, tree.adj_weight, root)
    dist[0] = 0.0
    return dist


def diametral_path(tree: Tree) -> np.ndarray:
    """A maximum-distance path, as a 1-based vertex array (slot 0 is 0).

    Deterministic: both farthest-vertex sweeps break ties towards the
    smallest vertex id.
    """
    dist, _ = _kernels.tree_sweep(tree.n, tree.adj_start, tree.adj_to, tree.adj_weight, 1)
    a = int(np.argmax(dist[1:])) + 1
    dist_a, parent = _kernels.tree_sweep(tree.n, tree.adj_start, tree.adj_to, tree.adj_weight, a)
    b = int(np.argmax(dist_a[1:])) + 1
    hops = [b]
    while hops[-1] != a:
        hops.append(int(parent[hops[-1]]))
    if hops[0] > hops[-1]:  # orient from the smaller endpoint id
        hops.reverse()
    return np.array([0] + hops, np.int64)


@dataclass(frozen=True, eq=False)
class TreeDecomposition:
    """A diametral path plus the parts of the tree hanging off it.

    ``hang_weight[k]`` is the eccentricity of the k-th path vertex inside its
    hanging component, ``subtree_of[v]`` maps every vertex to the path index
    whose component contains it, and ``anchor_dist[v]`` is the distance from
    ``v`` to that path vertex.
    """

    path: np.ndarray
    hang_weight: np.ndarray
    subtree_of: np.ndarray
    anchor_dist: np.ndarray

    @property
    def length(self) -> int:
        return self.path.shape[0] - 1


def hanging_weights(tree: Tree, path: np.ndarray) -> TreeDecomposition:
    """Decompose ``tree`` around ``path`` (must be a path in the tree)."""
    path = np.asarray(path, np.int64)
    if path[0] != 0:
        path = np.concatenate(([0], path)).astype(np.int64)
    npath = path.shape[0] - 1
    if npath < 2:
        raise InputError("path must contain at least two vertices", reason="path")
    inner = path[1:]
    if inner.min() < 1 or inner.max() > tree.n or np.unique(inner).size != npath:
        raise InputError("path vertices must be distinct and in range", reason="path")
    ok, comp, to_anchor, hang = _kernels.assign_hanging(
        tree.n, tree.adj_start, tree.adj_to, tree.adj_weight, path
    )
    if not ok:
        raise InputError("consecutive path vertices are not tree edges", reason="path")
    return TreeDecomposition(path=path, hang_weight=hang, subtree_of=comp, anchor_dist=to_anchor)


def check_graph_metric(tree: Tree, cost) -> bool:
    """Exhaustively test c(u,v) <= c(u,z) + d(z,v) over all distinct triples.

    Cubic in n; intended for inputs with n <= 200.
    """
    n = tree.n
    cmat = cost.full_matrix(tree)[1:, 1:]
    dmat = np.empty((n, n), np.float64)
    for v in range(1, n + 1):
        dmat[v - 1] = tree_distances_from(tree, v)[1:]
    for z in range(n):
        bound = cmat[:, z][:, None] + dmat[z][None, :]
        ok = cmat <= bound
        ok[z, :] = True
        ok[:, z] = True
        np.fill_diagonal(ok, True)
        if not ok.all():
            return False
    return True
