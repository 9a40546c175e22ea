"""Linear-time search for a shortcut whose augmented weighted diameter stays
within a given budget, plus the monotone index state it is built from."""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InputError
from .instance import PathInstance

# scratch arrays reused across probes of the same instance
_workspaces: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def _workspace(inst: PathInstance):
    ws = _workspaces.get(inst)
    if ws is None:
        n = inst.n
        ws = (
            np.zeros(n + 2, np.int64),  # reach
            np.zeros(n + 1, np.int64),  # mu
            np.zeros(n + 1, np.int64),  # sigma
            np.zeros(n + 2, np.int64),  # theta
            np.zeros(n + 1, np.int64),  # rho
            np.zeros(n + 2, np.int64),  # first_ok
            np.zeros(6, np.int64),  # moves
        )
        _workspaces[inst] = ws
    return ws


@dataclass
class ProbeCounter:
    """Counts budget probes; handed through the exact solver's phases."""

    probes: int = 0
    by_phase: dict = field(default_factory=dict)
    _phase: str = "unphased"

    def phase(self, name: str) -> None:
        self._phase = name

    def tick(self) -> None:
        self.probes += 1
        self.by_phase[self._phase] = self.by_phase.get(self._phase, 0) + 1


@dataclass(frozen=True)
class DecisionState:
    """Index sequences of one probe (meaningful on the non-trivial path).

    ``reach[i]``: last partner j > i with rel[i]+d(i,j)+rel[j] within budget
    (i when none). ``tail``: first index whose weighted distance to the right
    end fits. ``mu``/``sigma``/``theta``: monotone component windows.
    ``rho[i]``: the candidate partner tested against ``slack_min`` (0 when
    undefined). ``moves``: pointer movement per sweep.
    """

    budget: float
    strict: bool
    reach: np.ndarray
    tail: int
    mu: np.ndarray
    sigma: np.ndarray
    theta: np.ndarray
    rho: np.ndarray
    slack_min: float
    moves: np.ndarray


def feasible(
    inst: PathInstance,
    budget: float,
    strict: bool = False,
    counter: ProbeCounter | None = None,
    with_state: bool = False,
):
    """Find (i, j) with augmented weighted diameter <= budget (< when
    ``strict``), or None.

    The returned pair itself satisfies the bound, not merely witnesses
    existence. Runs in O(N): every index sequence is a monotone pointer
    sweep. The trivial budget >= path length case returns (1, 2) at once.
    """
    if not np.isfinite(budget):
        raise InputError("budget must be finite", reason="budget")
    if counter is not None:
        counter.tick()
    code, const, mat, coords = inst.cost.args()
    reach, mu, sigma, theta, rho, first_ok, moves = _workspace(inst)
    found, i, j, tail, slack_min = _kernels.decide(
        inst.prefix, inst.relaxed, code, const, mat, coords, float(budget), strict,
        reach, mu, sigma, theta, rho, first_ok, moves,
    )
    pair = (int(i), int(j)) if found else None
    if not with_state:
        return pair
    state = DecisionState(
        budget=float(budget),
        strict=strict,
        reach=reach.copy(),
        tail=int(tail),
        mu=mu.copy(),
        sigma=sigma.copy(),
        theta=theta.copy(),
        rho=rho.copy(),
        slack_min=float(slack_min),
        moves=moves.copy(),
    )
    return pair, state
