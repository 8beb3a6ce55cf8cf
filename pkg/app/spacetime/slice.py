"""Opens of the Cauchy slice: unions of integer site intervals."""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from app.core.exceptions import CoverException
from app.spacetime.lattice import Window


@dataclass(frozen=True)
class SliceOpen:
    """Normalized union of closed site intervals: sorted, disjoint, non-adjacent."""

    intervals: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_sites(cls, sites: Iterable[int]) -> "SliceOpen":
        ordered = sorted(set(sites))
        intervals: list[tuple[int, int]] = []
        for k in ordered:
            if intervals and intervals[-1][1] + 1 == k:
                intervals[-1] = (intervals[-1][0], k)
            else:
                intervals.append((k, k))
        return cls(tuple(intervals))

    @classmethod
    def interval(cls, lo: int, hi: int) -> "SliceOpen":
        return cls.from_sites(range(lo, hi + 1))

    @classmethod
    def parse(cls, text: str) -> "SliceOpen":
        """"0-1,3" -> sites {0, 1, 3}; an empty string is the empty open."""
        sites: set[int] = set()
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            try:
                if "-" in part[1:]:
                    cut = part.index("-", 1)
                    lo, hi = int(part[:cut]), int(part[cut + 1:])
                    if hi < lo:
                        raise ValueError
                    sites.update(range(lo, hi + 1))
                else:
                    sites.add(int(part))
            except ValueError:
                raise CoverException(
                    f"Cannot parse slice open '{text}'",
                    details={"text": text, "part": part},
                ) from None
        return cls.from_sites(sites)

    @property
    def sites(self) -> frozenset[int]:
        return frozenset(k for lo, hi in self.intervals for k in range(lo, hi + 1))

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    @property
    def is_connected(self) -> bool:
        return len(self.intervals) == 1

    def components(self) -> list["SliceOpen"]:
        return [SliceOpen((iv,)) for iv in self.intervals]

    def union(self, other: "SliceOpen") -> "SliceOpen":
        return SliceOpen.from_sites(self.sites | other.sites)

    def intersection(self, other: "SliceOpen") -> "SliceOpen":
        return SliceOpen.from_sites(self.sites & other.sites)

    def difference(self, other: "SliceOpen") -> "SliceOpen":
        return SliceOpen.from_sites(self.sites - other.sites)

    def __le__(self, other: "SliceOpen") -> bool:
        return self.sites <= other.sites

    def sort_key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        return (len(self.sites), self.intervals)

    def within(self, window: Window) -> bool:
        return all(window.lo <= lo and hi <= window.hi for lo, hi in self.intervals)

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return ",".join(str(lo) if lo == hi else f"{lo}-{hi}" for lo, hi in self.intervals)


class SlicePoset:
    """Opens of the slice row of a window with a bounded number of components."""

    def __init__(self, window: Window, max_components: int = 2):
        self.window = window
        self.max_components = max_components

    def opens(self) -> Iterator[SliceOpen]:
        """Nonempty opens, ordered by size then position."""
        sites = list(self.window.sites)
        for size in range(1, len(sites) + 1):
            for chosen in combinations(sites, size):
                u = SliceOpen.from_sites(chosen)
                if len(u.intervals) <= self.max_components:
                    yield u

    def all_opens(self) -> Iterator[SliceOpen]:
        yield SliceOpen()
        sites = list(self.window.sites)
        for size in range(1, len(sites) + 1):
            for chosen in combinations(sites, size):
                yield SliceOpen.from_sites(chosen)

    def disjoint_pairs(self) -> Iterator[tuple[SliceOpen, SliceOpen]]:
        """Unordered pairs of nonempty disjoint opens (any number of components)."""
        opens = [u for u in self.all_opens() if not u.is_empty]
        for i, u in enumerate(opens):
            for v in opens[i + 1:]:
                if not (u.sites & v.sites):
                    yield u, v
