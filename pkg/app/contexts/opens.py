"""Alexandrov topology on a context poset: opens are the up-closed subsets."""

from typing import Optional

from app.contexts.poset import ContextPoset
from app.core.config import settings
from app.core.exceptions import CapExceededException


def alexandrov_opens(poset: ContextPoset, cap: Optional[int] = None) -> list[frozenset[int]]:
    """
    Enumerate every up-closed subset of the poset.

    Elements are decided from the top down, so an element may join the open only
    when all of its strict upper bounds already did.
    """
    limit = cap or settings.opens_cap
    n = len(poset)
    # Fewer upper bounds first: a linear extension of the reversed order
    order = sorted(range(n), key=lambda i: sum(poset.leq[i][j] for j in range(n)))
    above = {i: [j for j in range(n) if j != i and poset.leq[i][j]] for i in range(n)}

    opens: list[frozenset[int]] = []
    chosen: set[int] = set()

    def visit(k: int) -> None:
        if k == len(order):
            if len(opens) >= limit:
                raise CapExceededException(
                    f"Alexandrov opens exceed cap of {limit}",
                    cap=limit,
                    bound=2 ** n,
                    details={"poset_size": n},
                )
            opens.append(frozenset(chosen))
            return
        x = order[k]
        visit(k + 1)
        if all(j in chosen for j in above[x]):
            chosen.add(x)
            visit(k + 1)
            chosen.discard(x)

    visit(0)
    return sorted(opens, key=lambda s: (len(s), sorted(s)))


def is_up_closed(poset: ContextPoset, subset: frozenset[int]) -> bool:
    n = len(poset)
    return all(j in subset for i in subset for j in range(n) if poset.leq[i][j])
