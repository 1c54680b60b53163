from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from .dyadic import Dyadic

Point = Tuple[Dyadic, Dyadic]


def _collinear(p: Point, q: Point, r: Point) -> bool:
    return (q[1] - p[1]) * (r[0] - q[0]) == (r[1] - q[1]) * (q[0] - p[0])


def canonical_breaks(points: Sequence[Point]) -> Tuple[Point, ...]:
    """
    Drop interior points at which the slope does not change.

    The input must already be sorted and strictly increasing in both coordinates.
    """
    kept: List[Point] = []
    for point in points:
        while len(kept) >= 2 and _collinear(kept[-2], kept[-1], point):
            kept.pop()
        kept.append(point)
    return tuple(kept)


@dataclass(frozen=True)
class PLMap:
    """
    Element of F as its canonical break list.

    `breaks` always starts with (0, 0), ends with (1, 1) and holds no interior
    point where the two adjacent slopes agree, so two maps are equal exactly when
    their break lists are. Build instances through `services.plmap.from_breaks`
    (validating) or `PLMap.canonical` (trusted input).

    Attributes:
        breaks (tuple): Sorted (x, y) pairs of Dyadic coordinates.
    """
    breaks: Tuple[Point, ...]

    @classmethod
    def canonical(cls, points: Sequence[Point]) -> "PLMap":
        return cls(canonical_breaks(points))

    @cached_property
    def xs(self) -> Tuple[Dyadic, ...]:
        return tuple(x for x, _ in self.breaks)

    @cached_property
    def ys(self) -> Tuple[Dyadic, ...]:
        return tuple(y for _, y in self.breaks)

    @cached_property
    def interior_breaks(self) -> Tuple[Point, ...]:
        return self.breaks[1:-1]

    def segments(self) -> Iterator[Tuple[Point, Point]]:
        return zip(self.breaks, self.breaks[1:])

    def segment_index(self, t: Fraction) -> int:
        """Index i of the segment [x_i, x_{i+1}] containing t (the last one for t = 1)."""
        return min(bisect_right(self.xs, t) - 1, len(self.breaks) - 2)

    def is_identity(self) -> bool:
        return len(self.breaks) == 2

    def __str__(self):
        if self.is_identity():
            return "identity"
        return "; ".join(f"({x}, {y})" for x, y in self.interior_breaks)


@dataclass(frozen=True, order=True)
class Orbital:
    """
    Maximal open interval (lo, hi) moved by a map; both ends are fixed points.

    Ends are exact rationals: fixed points inside a segment of slope s != 1
    need not be dyadic.
    """
    lo: Fraction
    hi: Fraction

    def __contains__(self, t: Fraction) -> bool:
        return self.lo < t < self.hi

    def __str__(self):
        return f"({self.lo}, {self.hi})"
