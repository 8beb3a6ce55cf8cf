"""The net-wide context poset and its per-region restrictions."""

import logging
import threading
from typing import Optional

from app.algebra.spans import AlgebraSpan
from app.contexts.poset import ContextPoset, build_context_poset
from app.net.net import Net, SliceNet

logger = logging.getLogger(__name__)


class NetContexts:
    """
    One context poset over A(window), built from every declared generator and
    closed under intersection with each region and slice-open algebra. The
    poset of a region is the sub-poset of contexts inside its algebra.
    """

    def __init__(
        self,
        slice_net: SliceNet,
        include_trivial_context: Optional[bool] = None,
        context_cap: Optional[int] = None,
    ):
        self.slice_net = slice_net
        self.net: Net = slice_net.net
        algebras: dict[AlgebraSpan, None] = {}
        for k in range(len(self.net.regions)):
            algebras.setdefault(self.net.evaluate_index(k))
        for u in slice_net.slice.all_opens():
            algebras.setdefault(slice_net.evaluate(u))
        self.algebras = list(algebras)
        self.global_poset = build_context_poset(
            self.net.window_algebra(),
            self.net.generators(),
            closure_algebras=self.algebras,
            include_trivial_context=include_trivial_context,
            context_cap=context_cap,
        )
        self._posets: dict[AlgebraSpan, ContextPoset] = {}
        self._ids: dict[AlgebraSpan, list[int]] = {}
        self._lock = threading.Lock()
        logger.info(
            f"Net '{self.net.name}': {len(self.global_poset)} contexts over "
            f"{len(self.algebras)} distinct local algebras"
        )

    @property
    def include_trivial_context(self) -> bool:
        return self.global_poset.include_trivial_context

    def ids_within(self, algebra: AlgebraSpan) -> list[int]:
        """Global context ids contained in `algebra`."""
        hit = self._ids.get(algebra)
        if hit is None:
            hit = self.global_poset.members_within(algebra)
            with self._lock:
                hit = self._ids.setdefault(algebra, hit)
        return hit

    def poset_for(self, algebra: AlgebraSpan) -> ContextPoset:
        hit = self._posets.get(algebra)
        if hit is None:
            hit = self.global_poset.restrict(algebra)
            with self._lock:
                hit = self._posets.setdefault(algebra, hit)
        return hit

    def restriction(self, i: int, algebra: AlgebraSpan) -> int:
        """Global id of global context i intersected with `algebra`."""
        return self.global_poset.restriction(i, algebra)
