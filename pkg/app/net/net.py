"""Net evaluation over causally complete regions and restriction to the slice."""

import logging
import threading
from typing import Optional

from app.algebra.spans import AlgebraSpan, join
from app.algebra.spectral import GeneratorDecl
from app.core.config import settings
from app.core.exceptions import CoverException, RegionException
from app.net.base import BaseNetFamily, NetSpec
from app.net.families import get_family
from app.spacetime.regions import Region, RegionPoset, build_region_poset, diamond_of_interval
from app.spacetime.slice import SliceOpen, SlicePoset

logger = logging.getLogger(__name__)


class Net:
    """
    Copresheaf O -> A(O) over the region poset of the spec's window.

    Evaluation is memoized per region mask; fills are idempotent so concurrent
    readers at worst compute the same span twice.
    """

    def __init__(self, spec: NetSpec, family: BaseNetFamily, regions: RegionPoset):
        self.spec = spec
        self.family = family
        self.regions = regions
        self.window = spec.window
        self._memo: dict[int, AlgebraSpan] = {}
        self._lock = threading.Lock()

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def ambient_dim(self) -> int:
        return self.family.ambient_dim

    def generators(self) -> list[GeneratorDecl]:
        return self.family.generators()

    def evaluate(self, region: Region) -> AlgebraSpan:
        if region.window != self.window or self.regions.find(region) is None:
            raise RegionException(
                "Region is not a causally complete region of this net's window",
                details={"region": region.describe(), "window": self.window.describe()},
            )
        hit = self._memo.get(region.mask)
        if hit is not None:
            return hit
        algebra = self.family.algebra_for_sites(frozenset(region.sites()), not region.is_empty)
        with self._lock:
            return self._memo.setdefault(region.mask, algebra)

    def evaluate_index(self, k: int) -> AlgebraSpan:
        return self.evaluate(self.regions.region(k))

    def window_algebra(self) -> AlgebraSpan:
        return self.evaluate(Region(self.window, self.regions.structure.full))

    def __repr__(self) -> str:
        return f"Net(name={self.name!r}, family={self.spec.family.value}, window={self.window})"


def build_net(spec: NetSpec, region_cap: Optional[int] = None) -> Net:
    family = get_family(spec)
    regions = build_region_poset(spec.window, region_cap or settings.region_cap)
    logger.info(
        f"Built net '{spec.name}' ({spec.family.value}) on {spec.window}: "
        f"ambient dim {family.ambient_dim}, {len(regions)} regions"
    )
    return Net(spec, family, regions)


def evaluate_net(spec: NetSpec, region: Region) -> AlgebraSpan:
    """One-shot evaluation; build the Net once when evaluating many regions."""
    return build_net(spec).evaluate(region)


class SliceNet:
    """U -> A(O_U) on slice opens; disconnected opens take the join over components."""

    def __init__(self, net: Net):
        self.net = net
        self.window = net.window
        self.slice = SlicePoset(net.window)
        self._memo: dict[SliceOpen, AlgebraSpan] = {}
        self._lock = threading.Lock()

    def diamond(self, u: SliceOpen) -> Region:
        if not u.is_connected:
            raise CoverException(
                f"Slice open {u} has no single diamond", details={"open": str(u)}
            )
        lo, hi = u.intervals[0]
        return diamond_of_interval(lo, hi, self.window)

    def evaluate(self, u: SliceOpen) -> AlgebraSpan:
        if not u.within(self.window):
            raise CoverException(
                f"Slice open {u} leaves window {self.window}",
                details={"open": str(u), "window": self.window.describe()},
            )
        hit = self._memo.get(u)
        if hit is not None:
            return hit
        result = AlgebraSpan.trivial(self.net.ambient_dim)
        for component in u.components():
            result = join(result, self.net.evaluate(self.diamond(component)))
        with self._lock:
            return self._memo.setdefault(u, result)

    def full(self) -> SliceOpen:
        return SliceOpen.interval(self.window.lo, self.window.hi)


def restrict_to_slice(net: Net) -> SliceNet:
    return SliceNet(net)
