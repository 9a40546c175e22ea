"""treeshortcut: minimum-diameter single-shortcut augmentation of trees.

Exact in O(n^2) for arbitrary nonnegative costs, exact in O(n log n) for
(graph-)metric costs, and (1+epsilon)-approximate in near-linear time, each
cross-validated against exhaustive reference implementations.
"""

from .approx import ApproxPlan, representatives, solve_approx
from .bruteforce import augmented_diameter, best_pair_brute, best_shortcut_brute, closure_brute
from .closure import ClosureTable, path_closure, realize_shortcut, solve_general
from .costs import CostOracle, cost_const, cost_coords, cost_matrix, cost_treedist
from .decision import DecisionState, ProbeCounter, feasible
from .envelope import Envelope, Line, build as build_envelope
from .errors import InputError, InternalError, MetricViolationError
from .instance import (
    ComponentValues,
    PathInstance,
    components_brute,
    cycle_term_brute,
    diameter_after,
    diameter_brute,
    end_terms,
    induce_instance,
    make_path_instance,
    relax_weights,
    restrict_instance,
)
from .pipeline import approx_tree, decide_tree, prepare_instance, solve_tree
from .solution import Solution
from .solver import SolverState, solve, weighted_median
from .tree import (
    Tree,
    TreeDecomposition,
    build_tree,
    check_graph_metric,
    diametral_path,
    hanging_weights,
    tree_distances_from,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxPlan",
    "ClosureTable",
    "ComponentValues",
    "CostOracle",
    "DecisionState",
    "Envelope",
    "InputError",
    "InternalError",
    "Line",
    "MetricViolationError",
    "PathInstance",
    "ProbeCounter",
    "Solution",
    "SolverState",
    "Tree",
    "TreeDecomposition",
    "approx_tree",
    "augmented_diameter",
    "best_pair_brute",
    "best_shortcut_brute",
    "build_envelope",
    "build_tree",
    "check_graph_metric",
    "closure_brute",
    "components_brute",
    "cost_const",
    "cost_coords",
    "cost_matrix",
    "cost_treedist",
    "cycle_term_brute",
    "decide_tree",
    "diameter_after",
    "diameter_brute",
    "diametral_path",
    "end_terms",
    "feasible",
    "hanging_weights",
    "induce_instance",
    "make_path_instance",
    "path_closure",
    "prepare_instance",
    "realize_shortcut",
    "relax_weights",
    "representatives",
    "restrict_instance",
    "solve",
    "solve_approx",
    "solve_general",
    "solve_tree",
    "tree_distances_from",
    "weighted_median",
]
