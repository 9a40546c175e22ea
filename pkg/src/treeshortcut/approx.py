"""(1+epsilon)-approximation for metric instances: window the path, keep one
representative per window, solve the restricted instance exactly, and
re-measure the winner on the full instance."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .instance import PathInstance, diameter_after, restrict_instance
from .solution import Solution
from .solver import solve as solve_path


@dataclass(frozen=True)
class ApproxPlan:
    """Windowing plan: window width and the chosen representative positions.

    The path splits into windows of width epsilon * length / 18; each window
    keeps its largest-relaxed-weight position, and both path ends are always
    included. At most ceil(18/epsilon) + 2 representatives.
    """

    epsilon: float
    window: float
    positions: np.ndarray = field(repr=False)  # 1-based padded, increasing

    @property
    def count(self) -> int:
        return self.positions.shape[0] - 1


def representatives(inst: PathInstance, epsilon: float) -> ApproxPlan:
    """One left-to-right scan choosing the max-relaxed-weight position per
    window; positions exactly on a window boundary join the lower window."""
    if not (epsilon > 0):
        raise InputError("epsilon must be positive", reason="epsilon")
    n = inst.n
    p = inst.prefix
    total = float(p[n])
    window = epsilon * total / 18.0
    if window >= total:
        bins = np.ones(n, np.int64)
    else:
        bins = np.ceil(p[1:] / window).astype(np.int64)
        bins[0] = 1
        np.clip(bins, 1, int(bins[-1]), out=bins)
    keep = [1, n]
    start = 0
    rel = inst.relaxed
    while start < n:
        end = int(np.searchsorted(bins, bins[start], side="right"))
        seg = rel[start + 1 : end + 1]
        keep.append(start + 1 + int(np.argmax(seg)))
        start = end
    pos = np.unique(np.asarray(keep, np.int64))
    return ApproxPlan(
        epsilon=float(epsilon),
        window=float(window),
        positions=np.concatenate(([0], pos)).astype(np.int64),
    )


def solve_approx(inst: PathInstance, epsilon: float, with_plan: bool = False):
    """Shortcut whose full-instance diameter is within (1+epsilon) of optimal.

    O(N) to window and re-measure plus an exact solve on O(1/epsilon)
    representatives. The reported diameter is measured on the full instance.
    """
    plan = representatives(inst, epsilon)
    sub = restrict_instance(inst, plan.positions)
    picked = solve_path(sub)
    i = int(plan.positions[picked.u])
    j = int(plan.positions[picked.v])
    diam = diameter_after(inst, i, j)
    sol = Solution(i, j, inst.cost_value(i, j), diam)
    if with_plan:
        return sol, plan
    return sol
