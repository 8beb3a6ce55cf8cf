"""Exhaustive global-section search over a spectral presheaf."""

import logging
from dataclasses import dataclass, field
from typing import Optional

from app.contexts.poset import ContextPoset
from app.core.config import settings
from app.spectra.presheaf import SpectralPresheaf

logger = logging.getLogger(__name__)

WITNESS_LIMIT = 4


@dataclass
class SectionCount:
    """Result of a global-section search; `exact` is False when the cap stopped it."""

    count: int
    exact: bool
    cap: int
    witnesses: list[dict[str, int]] = field(default_factory=list)

    def merge(self, other: "SectionCount") -> "SectionCount":
        total = self.count + other.count
        witnesses = (self.witnesses + other.witnesses)[:WITNESS_LIMIT]
        if total >= self.cap:
            return SectionCount(self.cap, False, self.cap, witnesses)
        return SectionCount(total, self.exact and other.exact, self.cap, witnesses)


class SectionSearch:
    """
    Backtracking over maximal contexts, propagating each choice to every
    context below it. Non-maximal contexts are fixed by propagation alone.
    """

    def __init__(self, poset: ContextPoset, presheaf: SpectralPresheaf, cap: Optional[int] = None):
        self.poset = poset
        self.presheaf = presheaf
        self.cap = cap or settings.section_cap
        n = len(poset)
        self.below = {
            m: [i for i in range(n) if i != m and poset.leq[i][m]] for m in range(n)
        }
        # Most constrained first: contexts with more sub-contexts fix more of the search
        self.order = sorted(poset.maximal(), key=lambda m: (-len(self.below[m]), m))

    def branches(self) -> list[int]:
        """Character indices of the first maximal context (the top-level split)."""
        if not self.order:
            return []
        return list(range(len(self.presheaf.characters[self.order[0]])))

    def run(self, first_choice: Optional[int] = None) -> SectionCount:
        """Count sections, optionally only those taking `first_choice` on the first context."""
        assigned: dict[int, int] = {}
        result = SectionCount(0, True, self.cap)

        def assign(m: int, k: int) -> Optional[list[int]]:
            """Choose character k on m; return contexts newly fixed, or None on conflict."""
            fixed: list[int] = []
            for i in [m, *self.below[m]]:
                want = self.presheaf.restrict(m, i, k)
                have = assigned.get(i)
                if have is None:
                    assigned[i] = want
                    fixed.append(i)
                elif have != want:
                    for j in fixed:
                        del assigned[j]
                    return None
            return fixed

        def visit(pos: int) -> bool:
            if pos == len(self.order):
                result.count += 1
                if len(result.witnesses) < WITNESS_LIMIT:
                    result.witnesses.append(
                        {self.poset.contexts[i].name: k for i, k in sorted(assigned.items())}
                    )
                return result.count < self.cap
            m = self.order[pos]
            if m in assigned:
                return visit(pos + 1)
            choices = range(len(self.presheaf.characters[m]))
            if pos == 0 and first_choice is not None:
                choices = range(first_choice, first_choice + 1)
            for k in choices:
                fixed = assign(m, k)
                if fixed is None:
                    continue
                keep_going = visit(pos + 1)
                for j in fixed:
                    del assigned[j]
                if not keep_going:
                    return False
            return True

        complete = visit(0)
        if not complete:
            result.exact = False
            logger.warning(f"Section search stopped at cap {self.cap}; count is a lower bound")
        return result


def enumerate_global_sections(
    poset: ContextPoset,
    presheaf: SpectralPresheaf,
    cap: Optional[int] = None,
) -> SectionCount:
    """Exact number of global sections (or a lower bound at the cap) with witnesses."""
    return SectionSearch(poset, presheaf, cap).run()
