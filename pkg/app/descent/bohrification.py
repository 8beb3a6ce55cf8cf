"""Bohrification: algebras to ringed poset-spaces, and the Bohrified net over regions."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from app.algebra.spans import AlgebraSpan
from app.algebra.spectral import GeneratorDecl
from app.contexts.functor import IntersectionFunctor, intersection_functor
from app.contexts.opens import alexandrov_opens
from app.contexts.poset import ContextPoset, TautologicalCopresheaf, build_context_poset
from app.core.exceptions import ContextClosureException
from app.net.contexts import NetContexts
from app.net.net import Net

logger = logging.getLogger(__name__)


class RingedPosetSpace:
    """A context poset with its Alexandrov topology and the tautological ring."""

    def __init__(self, poset: ContextPoset):
        self.poset = poset
        self.ring = TautologicalCopresheaf(poset)
        if not self.ring.check_functorial():
            raise ContextClosureException(
                "Tautological ring is not functorial over the context order",
                details={"poset_size": len(poset)},
            )

    @property
    def points(self) -> int:
        return len(self.poset)

    def opens(self, cap: Optional[int] = None) -> list[frozenset[int]]:
        return alexandrov_opens(self.poset, cap)

    def sections(self, open_set: frozenset[int]) -> dict[int, AlgebraSpan]:
        """Ring values over the points of an open."""
        return {i: self.ring.assignment(i) for i in sorted(open_set)}


def bohrify(
    region_algebra: AlgebraSpan,
    gens: Sequence[GeneratorDecl],
    include_trivial_context: Optional[bool] = None,
) -> RingedPosetSpace:
    return RingedPosetSpace(
        build_context_poset(region_algebra, gens, include_trivial_context=include_trivial_context)
    )


@dataclass(frozen=True)
class StructureMap:
    """C(A(O2)) -> C(A(O1)) for O1 <= O2, with the inclusions C n A(O1) -> C."""

    functor: IntersectionFunctor
    epsilon_inclusions: bool


class BohrifiedNet:
    """
    O -> (C(A(O)), tautological ring), contravariant in O.

    Spaces and structure maps are stored per distinct algebra so regions sharing
    an algebra share a space.
    """

    def __init__(self, net: Net, contexts: NetContexts):
        self.net = net
        self.contexts = contexts
        self.spaces: dict[AlgebraSpan, RingedPosetSpace] = {}
        for k in range(len(net.regions)):
            algebra = net.evaluate_index(k)
            if algebra not in self.spaces:
                self.spaces[algebra] = RingedPosetSpace(contexts.poset_for(algebra))

        self.maps: dict[tuple[AlgebraSpan, AlgebraSpan], StructureMap] = {}
        for i, j in list(net.regions.comparable_pairs()) + [
            (k, k) for k in range(len(net.regions))
        ]:
            small, big = net.evaluate_index(i), net.evaluate_index(j)
            if (small, big) not in self.maps:
                self.maps[(small, big)] = self._structure_map(small, big)
        self.functorial = self._check_contravariance()
        logger.debug(
            f"Bohrified net '{net.name}': {len(self.spaces)} spaces, "
            f"{len(self.maps)} structure maps"
        )

    def _structure_map(self, small: AlgebraSpan, big: AlgebraSpan) -> StructureMap:
        p_big, p_small = self.spaces[big].poset, self.spaces[small].poset
        functor = intersection_functor(p_big, small, p_small)
        epsilon = all(
            p_big[c].span.contains(p_small[functor(c)].span) for c in range(len(p_big))
        )
        return StructureMap(functor, epsilon)

    def _check_contravariance(self) -> bool:
        """Along O1 <= O2 <= O3 the map for O1 <= O3 is the composite of the other two."""
        for (a1, a2), first in self.maps.items():
            for a3 in self.spaces:
                outer = self.maps.get((a1, a3))
                inner = self.maps.get((a2, a3))
                if outer is None or inner is None:
                    continue
                if inner.functor.compose(first.functor).mapping != outer.functor.mapping:
                    return False
        return True

    def space(self, region_index: int) -> RingedPosetSpace:
        return self.spaces[self.net.evaluate_index(region_index)]

    def structure_map(self, smaller: int, larger: int) -> StructureMap:
        if not self.net.regions.leq(smaller, larger):
            raise ContextClosureException(
                "Structure maps exist only along region inclusions",
                details={"smaller": smaller, "larger": larger},
            )
        return self.maps[(self.net.evaluate_index(smaller), self.net.evaluate_index(larger))]

    @property
    def epsilon_inclusions(self) -> bool:
        return all(m.epsilon_inclusions for m in self.maps.values())

    def is_constant(self) -> bool:
        """Every nonempty region carries the same space."""
        nonempty = {
            self.net.evaluate_index(k)
            for k in range(len(self.net.regions))
            if self.net.regions.masks[k]
        }
        return len(nonempty) <= 1


def bohrified_net(net: Net, contexts: NetContexts) -> BohrifiedNet:
    return BohrifiedNet(net, contexts)

