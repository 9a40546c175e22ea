"""Tree-level entry points tying decomposition, induction, and solvers."""

from __future__ import annotations

from .bruteforce import best_shortcut_brute
from .closure import solve_general
from .costs import CostOracle
from .decision import feasible
from .errors import InputError
from .instance import PathInstance, diameter_after, induce_instance
from .approx import solve_approx
from .solution import Solution
from .solver import solve as solve_path
from .tree import Tree, diametral_path, hanging_weights

GRAPH_METRIC_CHECK_LIMIT = 200  # cubic verification bound


def prepare_instance(tree: Tree, cost: CostOracle) -> PathInstance:
    """Diametral-path projection of a tree instance."""
    return induce_instance(tree, hanging_weights(tree, diametral_path(tree)), cost)


def _map_to_tree(inst: PathInstance, i: int, j: int, cost_value: float, diam: float) -> Solution:
    u = int(inst.vertex_ids[i])
    v = int(inst.vertex_ids[j])
    return Solution(min(u, v), max(u, v), cost_value, diam)


def solve_tree(tree: Tree, cost: CostOracle, mode: str = "metric") -> Solution:
    """Minimum-diameter shortcut for a tree; the endpoint ids are tree ids.

    metric: O(n log n), requires a graph-metric cost. general: O(n^2), any
    nonnegative symmetric cost (endpoints are path anchors of the closed
    cost). brute: exhaustive reference.
    """
    if mode == "brute":
        return best_shortcut_brute(tree, cost)
    if mode == "general":
        return solve_general(tree, cost)
    if mode != "metric":
        raise InputError(f"unknown mode {mode!r}", reason="mode")
    inst = prepare_instance(tree, cost)
    sol = solve_path(inst)
    return _map_to_tree(inst, sol.u, sol.v, sol.shortcut_cost, sol.diameter)


def decide_tree(tree: Tree, cost: CostOracle, budget: float) -> Solution | None:
    """A shortcut keeping the augmented diameter within ``budget``, or None."""
    inst = prepare_instance(tree, cost)
    pair = feasible(inst, budget)
    if pair is None:
        return None
    i, j = pair
    return _map_to_tree(inst, i, j, inst.cost_value(i, j), diameter_after(inst, i, j))


def approx_tree(tree: Tree, cost: CostOracle, epsilon: float) -> Solution:
    """(1+epsilon)-approximate shortcut; endpoint ids are tree ids."""
    inst = prepare_instance(tree, cost)
    sol = solve_approx(inst, epsilon)
    return _map_to_tree(inst, sol.u, sol.v, sol.shortcut_cost, sol.diameter)
