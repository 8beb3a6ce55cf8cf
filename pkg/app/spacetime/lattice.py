"""Discretized 1+1 Minkowski space.

Points are integer pairs (t, x) with t + x even (the light-cone lattice).
Slice site k is the point (0, 2k), so neighbouring sites are spacelike and
the diamond over two neighbouring sites has apexes (+-1, 2k + 1).
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from app.core.exceptions import RegionException


class Point(NamedTuple):
    t: int
    x: int


def causal_leq(p: Point, q: Point) -> bool:
    """q lies in the closed future light cone of p."""
    return abs(q.x - p.x) <= q.t - p.t


def causally_related(p: Point, q: Point) -> bool:
    return causal_leq(p, q) or causal_leq(q, p)


def spacelike(u: Iterable[Point], v: Iterable[Point]) -> bool:
    """No point of u is causally related to a point of v."""
    vs = list(v)
    return all(not causally_related(p, q) for p in u for q in vs)


def site_point(k: int) -> Point:
    return Point(0, 2 * k)


@dataclass(frozen=True)
class Window:
    """
    Double cone over slice sites lo..hi: |t| + |x - (lo + hi)| <= hi - lo.

    It contains its slice row t = 0 and that row is a Cauchy surface for it.
    """

    lo: int
    hi: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise RegionException(
                f"Empty window: sites {self.lo}..{self.hi}",
                details={"lo": self.lo, "hi": self.hi},
            )

    @classmethod
    def from_radius(cls, radius: int) -> "Window":
        return cls(-radius, radius)

    @classmethod
    def from_sites(cls, count: int) -> "Window":
        return cls(0, count - 1)

    @property
    def centre(self) -> int:
        return self.lo + self.hi

    @property
    def half_width(self) -> int:
        return self.hi - self.lo

    @property
    def sites(self) -> range:
        return range(self.lo, self.hi + 1)

    def contains(self, p: Point) -> bool:
        return (p.t + p.x) % 2 == 0 and abs(p.t) + abs(p.x - self.centre) <= self.half_width

    @cached_property
    def points(self) -> tuple[Point, ...]:
        h, c = self.half_width, self.centre
        pts = [
            Point(t, x)
            for t in range(-h, h + 1)
            for x in range(c - h, c + h + 1)
            if (t + x) % 2 == 0 and abs(t) + abs(x - c) <= h
        ]
        return tuple(sorted(pts))

    @cached_property
    def index(self) -> dict[Point, int]:
        return {p: k for k, p in enumerate(self.points)}

    @property
    def slice_points(self) -> tuple[Point, ...]:
        return tuple(site_point(k) for k in self.sites)

    def describe(self) -> dict[str, object]:
        return {
            "sites": [self.lo, self.hi],
            "apexes": [[-self.half_width, self.centre], [self.half_width, self.centre]],
            "points": len(self.points),
        }

    def __str__(self) -> str:
        return f"D(({-self.half_width},{self.centre}),({self.half_width},{self.centre}))"
