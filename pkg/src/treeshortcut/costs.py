"""Shortcut-cost oracles: constant, explicit matrix, point coordinates, and
tree-distance costs behind one O(1)-evaluation interface."""

from __future__ import annotations

import weakref

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InputError

KINDS = ("const", "matrix", "coords", "treedist")
CLASSES = ("general", "graph-metric", "metric")


@dataclass(frozen=True)
class PathCost:
    """Cost payload restricted to path indices, in kernel form."""

    code: int
    const: float = 0.0
    mat: np.ndarray = field(default_factory=lambda: np.zeros((1, 1)), repr=False)
    coords: np.ndarray = field(default_factory=lambda: np.zeros((1, 1)), repr=False)

    def args(self) -> tuple:
        return self.code, self.const, self.mat, self.coords

    def restrict(self, idx: np.ndarray) -> "PathCost":
        """Re-index the payload to a subsequence of path indices (1-based)."""
        if self.code == _kernels.COST_MATRIX:
            sub = self.mat[np.ix_(idx, idx)].copy()
            sub[0, :] = 0.0
            sub[:, 0] = 0.0
            return PathCost(self.code, mat=sub)
        if self.code == _kernels.COST_COORDS:
            sub = self.coords[idx].copy()
            sub[0] = 0.0
            return PathCost(self.code, coords=sub)
        return self  # const / tree-distance: position independent or prefix based


@dataclass(frozen=True, eq=False)
class CostOracle:
    """Symmetric nonnegative shortcut costs with O(1) evaluation.

    ``declared_class`` records what the caller promises about the cost
    ("metric" implies "graph-metric"); the metric pipeline verifies the
    promise on small inputs via :func:`treeshortcut.tree.check_graph_metric`.
    """

    kind: str
    declared_class: str
    const: float = 0.0
    matrix: np.ndarray | None = field(default=None, repr=False)
    coords: np.ndarray | None = field(default=None, repr=False)
    tree: object | None = field(default=None, repr=False)

    def value(self, u: int, v: int) -> float:
        if self.kind == "const":
            return self.const
        if self.kind == "matrix":
            return float(self.matrix[u, v])
        if self.kind == "coords":
            d = self.coords[u] - self.coords[v]
            return float(np.sqrt(np.dot(d, d)))
        return float(self.full_matrix(self.tree)[u, v])

    def full_matrix(self, tree=None) -> np.ndarray:
        """Materialize all pairwise costs as an (n+1, n+1) padded array."""
        if self.kind == "matrix":
            return self.matrix
        if self.kind == "coords":
            x = self.coords[1:]
            diff = x[:, None, :] - x[None, :, :]
            out = np.zeros((x.shape[0] + 1, x.shape[0] + 1))
            out[1:, 1:] = np.sqrt((diff * diff).sum(-1))
            return out
        tree = tree if tree is not None else self.tree
        if tree is None:
            raise InputError("cost oracle needs a tree to materialize", reason="cost")
        n = tree.n
        if self.kind == "const":
            out = np.full((n + 1, n + 1), self.const)
            np.fill_diagonal(out, 0.0)
            out[0, :] = 0.0
            out[:, 0] = 0.0
            return out
        cached = _treedist_cache.get(tree)
        if cached is None:
            from .tree import tree_distances_from

            out = np.zeros((n + 1, n + 1))
            for v in range(1, n + 1):
                out[v] = tree_distances_from(tree, v)
            cached = out
            _treedist_cache[tree] = cached
        return cached

    def restrict_to_path(self, path: np.ndarray) -> PathCost:
        """Kernel-form payload indexed by path position (1-based)."""
        if self.kind == "const":
            return PathCost(_kernels.COST_CONST, const=self.const)
        if self.kind == "treedist":
            return PathCost(_kernels.COST_PREFIX)
        if self.kind == "coords":
            sub = self.coords[path].astype(np.float64).copy()
            sub[0] = 0.0
            return PathCost(_kernels.COST_COORDS, coords=sub)
        sub = self.matrix[np.ix_(path, path)].astype(np.float64).copy()
        sub[0, :] = 0.0
        sub[:, 0] = 0.0
        return PathCost(_kernels.COST_MATRIX, mat=sub)


_treedist_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _check_common(declared_class: str) -> None:
    if declared_class not in CLASSES:
        raise InputError(f"unknown cost class {declared_class!r}", reason="cost")


def cost_const(value: float, declared_class: str = "metric") -> CostOracle:
    _check_common(declared_class)
    if value < 0:
        raise InputError("constant cost must be nonnegative", reason="cost")
    return CostOracle(kind="const", declared_class=declared_class, const=float(value))


def cost_matrix(matrix, declared_class: str = "general") -> CostOracle:
    """Explicit (n x n) symmetric cost table; stored 1-based padded."""
    _check_common(declared_class)
    m = np.asarray(matrix, np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError("cost matrix must be square", reason="cost")
    n = m.shape[0]
    padded = np.zeros((n + 1, n + 1))
    padded[1:, 1:] = m
    np.fill_diagonal(padded, 0.0)
    if (padded < 0).any():
        raise InputError("cost matrix entries must be nonnegative", reason="cost")
    if not np.array_equal(padded, padded.T):
        raise InputError("cost matrix must be symmetric", reason="cost")
    return CostOracle(kind="matrix", declared_class=declared_class, matrix=padded)


def cost_coords(points, declared_class: str = "metric") -> CostOracle:
    """Euclidean costs between embedded points (one row per vertex)."""
    _check_common(declared_class)
    x = np.asarray(points, np.float64)
    if x.ndim != 2:
        raise InputError("coordinates must be a 2-d array", reason="cost")
    padded = np.zeros((x.shape[0] + 1, x.shape[1]))
    padded[1:] = x
    return CostOracle(kind="coords", declared_class=declared_class, coords=padded)


def cost_treedist(tree, declared_class: str = "metric") -> CostOracle:
    """Costs equal to tree distances (shortcuts can never shorten anything)."""
    _check_common(declared_class)
    return CostOracle(kind="treedist", declared_class=declared_class, tree=tree)
