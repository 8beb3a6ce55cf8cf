"""Causal complements, completions and the poset of causally complete regions.

Regions are bitmasks over the window's points (bit k = window.points[k]).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from app.core.config import settings
from app.core.exceptions import CapExceededException, RegionException
from app.spacetime.lattice import Point, Window, causally_related, site_point

logger = logging.getLogger(__name__)


class CausalStructure:
    """Per-window masks: which points are spacelike to which."""

    def __init__(self, window: Window):
        self.window = window
        pts = window.points
        self.full = (1 << len(pts)) - 1
        self.spacelike_to: list[int] = []
        for p in pts:
            mask = 0
            for k, q in enumerate(pts):
                if not causally_related(p, q):
                    mask |= 1 << k
            self.spacelike_to.append(mask)

    def mask_of(self, points: Iterable[Point]) -> int:
        mask = 0
        for p in points:
            k = self.window.index.get(p)
            if k is None:
                raise RegionException(
                    f"Point {tuple(p)} lies outside window {self.window}",
                    details={"point": list(p), "window": self.window.describe()},
                )
            mask |= 1 << k
        return mask

    def points_of(self, mask: int) -> frozenset[Point]:
        pts = self.window.points
        return frozenset(pts[k] for k in range(len(pts)) if mask >> k & 1)

    def complement(self, mask: int) -> int:
        out = self.full
        k = 0
        while mask:
            if mask & 1:
                out &= self.spacelike_to[k]
            mask >>= 1
            k += 1
        return out

    def completion(self, mask: int) -> int:
        return self.complement(self.complement(mask))


@lru_cache(maxsize=64)
def causal_structure(window: Window) -> CausalStructure:
    return CausalStructure(window)


@dataclass(frozen=True)
class Region:
    """A set of window points; `causally_complete` is computed, never trusted."""

    window: Window
    mask: int

    @classmethod
    def of(cls, window: Window, points: Iterable[Point]) -> "Region":
        return cls(window, causal_structure(window).mask_of(points))

    @property
    def points(self) -> frozenset[Point]:
        return causal_structure(self.window).points_of(self.mask)

    @property
    def causally_complete(self) -> bool:
        return causal_structure(self.window).completion(self.mask) == self.mask

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def sites(self) -> tuple[int, ...]:
        """Slice sites k with (0, 2k) in the region."""
        idx = self.window.index
        return tuple(
            k for k in self.window.sites if self.mask >> idx[site_point(k)] & 1
        )

    def __le__(self, other: "Region") -> bool:
        return self.mask & ~other.mask == 0

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def describe(self) -> dict[str, object]:
        return {
            "sites": list(self.sites()),
            "points": [list(p) for p in sorted(self.points)],
        }


RegionLike = Union[Region, Iterable[Point]]


def _as_region(o: RegionLike, window: Window) -> Region:
    if isinstance(o, Region):
        if o.window != window:
            raise RegionException("Region belongs to a different window")
        return o
    return Region.of(window, o)


def causal_complement(o: RegionLike, window: Window) -> Region:
    """All window points spacelike to every point of o."""
    region = _as_region(o, window)
    return Region(window, causal_structure(window).complement(region.mask))


def causal_completion(o: RegionLike, window: Window) -> Region:
    """o -> o'' relative to the window."""
    region = _as_region(o, window)
    return Region(window, causal_structure(window).completion(region.mask))


def diamond_of_interval(lo: int, hi: int, window: Window) -> Region:
    """Smallest causally complete region containing slice sites lo..hi."""
    if hi < lo:
        raise RegionException(f"Empty slice interval [{lo}, {hi}]", details={"lo": lo, "hi": hi})
    if lo < window.lo or hi > window.hi:
        raise RegionException(
            f"Slice interval [{lo}, {hi}] leaves window {window}",
            details={"lo": lo, "hi": hi, "window": window.describe()},
        )
    return causal_completion([site_point(k) for k in range(lo, hi + 1)], window)


class RegionPoset:
    """Causally complete regions of a window, ordered by inclusion."""

    def __init__(self, window: Window, masks: list[int]):
        self.window = window
        self.structure = causal_structure(window)
        self.masks = sorted(masks, key=lambda m: (bin(m).count("1"), m))
        self.index = {m: k for k, m in enumerate(self.masks)}
        self.complements = [self.structure.complement(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def region(self, k: int) -> Region:
        return Region(self.window, self.masks[k])

    def regions(self) -> list[Region]:
        return [self.region(k) for k in range(len(self))]

    def find(self, region: Region) -> Optional[int]:
        return self.index.get(region.mask)

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & ~self.masks[j] == 0

    def spacelike(self, i: int, j: int) -> bool:
        return self.masks[j] & ~self.complements[i] == 0

    def join(self, i: int, j: int) -> int:
        """(O1 u O2)'' as a poset index."""
        return self.index[self.structure.completion(self.masks[i] | self.masks[j])]

    def comparable_pairs(self) -> Iterable[tuple[int, int]]:
        n = len(self)
        for i in range(n):
            for j in range(n):
                if i != j and self.leq(i, j):
                    yield i, j

    def spacelike_pairs(self, include_empty: bool = False) -> Iterable[tuple[int, int]]:
        """Unordered pairs i < j of spacelike regions."""
        n = len(self)
        for i in range(n):
            if not include_empty and self.masks[i] == 0:
                continue
            for j in range(i + 1, n):
                if not include_empty and self.masks[j] == 0:
                    continue
                if self.spacelike(i, j):
                    yield i, j


def build_region_poset(window: Window, cap: Optional[int] = None) -> RegionPoset:
    """
    Every causally complete region is an intersection of point complements
    {p}' (or the whole window), so closing {window} under intersection with
    each {p}' enumerates exactly the fixed points of the completion.
    """
    limit = cap or settings.region_cap
    structure = causal_structure(window)
    seen = {structure.full, 0}
    queue = [structure.full]
    while queue:
        m = queue.pop()
        for sl in structure.spacelike_to:
            nm = m & sl
            if nm not in seen:
                if len(seen) >= limit:
                    raise CapExceededException(
                        f"Region poset exceeds cap of {limit}",
                        cap=limit,
                        details={"window": window.describe()},
                    )
                seen.add(nm)
                queue.append(nm)
    logger.debug(f"Region poset for {window}: {len(seen)} causally complete regions")
    return RegionPoset(window, list(seen))


@dataclass(frozen=True)
class CauchyReport:
    """Outcome of checking that every maximal causal lattice path meets t = 0 once."""

    paths: int
    violations: int

    @property
    def holds(self) -> bool:
        return self.violations == 0


def verify_cauchy_slice(window: Window) -> CauchyReport:
    """Count maximal lightlike lattice paths and those not meeting the slice exactly once."""
    pts = set(window.points)

    def successors(p: Point) -> list[Point]:
        return [q for q in (Point(p.t + 1, p.x - 1), Point(p.t + 1, p.x + 1)) if q in pts]

    def has_predecessor(p: Point) -> bool:
        return any(q in pts for q in (Point(p.t - 1, p.x - 1), Point(p.t - 1, p.x + 1)))

    # counts[p][c] = number of maximal continuations from p crossing t = 0 exactly c times (c <= 2)
    counts: dict[Point, list[int]] = {}
    for p in sorted(pts, key=lambda q: -q.t):
        hit = 1 if p.t == 0 else 0
        succ = successors(p)
        row = [0, 0, 0]
        if not succ:
            row[hit] = 1
        for q in succ:
            for c, n in enumerate(counts[q]):
                row[min(c + hit, 2)] += n
        counts[p] = row

    total = bad = 0
    for p in pts:
        if has_predecessor(p):
            continue
        row = counts[p]
        total += sum(row)
        bad += row[0] + row[2]
    return CauchyReport(paths=total, violations=bad)
