"""Result record shared by every solver mode."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Solution:
    """A shortcut (u < v) with its cost and the resulting diameter."""

    u: int
    v: int
    shortcut_cost: float
    diameter: float

    def __post_init__(self):
        if self.u >= self.v:
            raise ValueError(f"need u < v, got ({self.u}, {self.v})")
