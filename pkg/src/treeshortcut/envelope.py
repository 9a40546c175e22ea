"""Upper envelope of lines: O(M log M) build, O(log M) point queries."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class Line:
    slope: float
    intercept: float

    def __call__(self, x: float) -> float:
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class Envelope:
    """Pointwise maximum of the input lines.

    ``pieces[k]`` attains the maximum on (breakpoints[k-1], breakpoints[k]);
    adjacent pieces meet exactly at the shared breakpoint. Piece slopes are
    strictly increasing. Immutable; queries are pure.
    """

    pieces: tuple[Line, ...]
    breakpoints: tuple[float, ...]

    def query(self, x: float) -> float:
        k = bisect.bisect_left(self.breakpoints, x)
        return self.pieces[k](x)


def build(lines) -> Envelope:
    """Construct the upper envelope by slope sort plus a hull stack.

    Duplicate slopes collapse to the largest intercept. Dominance tests
    compare intersection abscissas by cross-multiplication, avoiding
    division entirely.
    """
    items = [(float(l.slope), float(l.intercept)) for l in lines]
    if not items:
        raise InputError("envelope needs at least one line", reason="envelope")
    items.sort()
    dedup: list[tuple[float, float]] = []
    for a, b in items:
        if dedup and dedup[-1][0] == a:
            if b > dedup[-1][1]:
                dedup[-1] = (a, b)
        else:
            dedup.append((a, b))

    hull: list[tuple[float, float]] = []
    for a, b in dedup:
        while hull:
            if len(hull) == 1:
                # previous line useless iff dominated everywhere: same slope is
                # already collapsed, so keep it
                break
            a1, b1 = hull[-2]
            a2, b2 = hull[-1]
            # drop (a2, b2) iff cross(prev, new) happens at or before
            # cross(prev, mid): (b2-b)( a2-a1) <= (b1-b2)(a-a2)
            if (b2 - b) * (a2 - a1) <= (b1 - b2) * (a - a2):
                hull.pop()
            else:
                break
        hull.append((a, b))

    pieces = tuple(Line(a, b) for a, b in hull)
    breaks = []
    for (a1, b1), (a2, b2) in zip(hull, hull[1:]):
        breaks.append((b1 - b2) / (a2 - a1))
    return Envelope(pieces=pieces, breakpoints=tuple(breaks))
