"""The comparison map f into a pullback poset, its left adjoint, and full faithfulness."""

import logging
from dataclasses import dataclass, field
from typing import Optional

from app.algebra.spans import AlgebraSpan, is_commutative, join_all
from app.descent.pullback import Element, PullbackPoset
from app.net.contexts import NetContexts
from app.net.net import SliceNet
from app.spacetime.slice import SliceOpen

logger = logging.getLogger(__name__)


@dataclass
class ComparisonMap:
    """f: C(A(W)) -> pullback, C -> (C n A(U_1), ..., C n A(U_k))."""

    union: SliceOpen
    union_algebra: AlgebraSpan
    domain: list[int]
    pullback: PullbackPoset
    mapping: dict[int, Element]
    # first domain element whose image leaves the pullback
    ill_defined_at: Optional[int] = None

    @property
    def well_defined(self) -> bool:
        return self.ill_defined_at is None

    def __call__(self, c: int) -> Element:
        return self.mapping[c]

    def is_monotone(self) -> bool:
        leq = self.pullback.poset.leq
        return all(
            self.pullback.leq(self.mapping[a], self.mapping[b])
            for a in self.domain
            for b in self.domain
            if leq[a][b]
        )


def comparison_map(
    slice_net: SliceNet,
    contexts: NetContexts,
    pullback: PullbackPoset,
) -> ComparisonMap:
    union = pullback.pieces[0]
    for piece in pullback.pieces[1:]:
        union = union.union(piece)
    union_algebra = slice_net.evaluate(union)
    domain = contexts.ids_within(union_algebra)
    mapping: dict[int, Element] = {}
    ill_defined_at: Optional[int] = None
    for c in domain:
        image = tuple(contexts.restriction(c, a) for a in pullback.algebras)
        mapping[c] = image
        if ill_defined_at is None and image not in pullback:
            ill_defined_at = c
    return ComparisonMap(union, union_algebra, domain, pullback, mapping, ill_defined_at)


@dataclass
class LeftAdjoint:
    """
    Outcome of the search for L with L(x) <= c iff x <= f(c).

    `mapping` is complete only when `exists`; otherwise `witness` is the first x
    with no least context above it.
    """

    exists: bool
    mapping: dict[Element, int] = field(default_factory=dict)
    witness: Optional[Element] = None
    upper_set_size: int = 0
    certified: bool = False
    violations: int = 0
    monotone: bool = False
    join_agrees: Optional[bool] = None


def find_left_adjoint(f: ComparisonMap, locally_commuting: bool = False) -> LeftAdjoint:
    """
    L(x) = least c with x <= f(c). The adjunction law is then certified over every
    (x, c), monotonicity is checked rather than assumed, and when the cover's
    algebras commute L(x) is compared with the join of the components of x.
    """
    pullback = f.pullback
    poset = pullback.poset
    mapping: dict[Element, int] = {}
    for x in pullback.elements:
        above = [c for c in f.domain if pullback.leq(x, f(c))]
        least = poset.least(above)
        if least is None:
            logger.debug(
                f"No least context above {pullback.name(x)} ({len(above)} upper bounds)"
            )
            return LeftAdjoint(False, witness=x, upper_set_size=len(above))
        mapping[x] = least

    violations = sum(
        1
        for x in pullback.elements
        for c in f.domain
        if poset.leq[mapping[x]][c] != pullback.leq(x, f(c))
    )
    monotone = all(
        poset.leq[mapping[x]][mapping[y]]
        for x in pullback.elements
        for y in pullback.elements
        if pullback.leq(x, y)
    )
    join_agrees: Optional[bool] = None
    if locally_commuting:
        join_agrees = True
        d = f.union_algebra.ambient_dim
        for x in pullback.elements:
            joined = join_all((poset[c].span for c in x), d)
            if not is_commutative(joined) or poset[mapping[x]].span != joined:
                join_agrees = False
                break
    return LeftAdjoint(
        True,
        mapping=mapping,
        certified=violations == 0,
        violations=violations,
        monotone=monotone,
        join_agrees=join_agrees,
    )


@dataclass
class FullFaithfulness:
    holds: bool
    checked: int
    witness: Optional[Element] = None
    image: Optional[Element] = None


def check_fully_faithful(f: ComparisonMap, adjoint: LeftAdjoint) -> FullFaithfulness:
    """For posets, L is full and faithful iff f(L(x)) = x for every x."""
    if not adjoint.exists:
        return FullFaithfulness(False, 0)
    for n, x in enumerate(f.pullback.elements, start=1):
        image = f(adjoint.mapping[x])
        if image != x:
            return FullFaithfulness(False, n, witness=x, image=image)
    return FullFaithfulness(True, len(f.pullback))
