"""Finite posets of contexts (commutative subalgebras) ordered by inclusion."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import networkx as nx

from app.algebra.spans import (
    AlgebraSpan,
    generate_subalgebra,
    intersect,
    is_commutative,
    join,
)
from app.algebra.spectral import GeneratorDecl
from app.core.config import settings
from app.core.exceptions import (
    AlgebraMembershipException,
    CapExceededException,
    ContextClosureException,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Context:
    """A unital commutative subalgebra; `generators` lists the clique it was built from."""

    id: int
    span: AlgebraSpan
    generators: tuple[str, ...] = ()
    name: str = ""

    @property
    def dim(self) -> int:
        return self.span.dim

    @property
    def generated(self) -> bool:
        """Built directly from commuting declared generators (not only by intersection)."""
        return bool(self.generators) or self.span.dim == 1


class ContextPoset:
    """
    Contexts deduplicated by span, with a precomputed order matrix.

    `leq[i][j]` means contexts[i] is contained in contexts[j].
    """

    def __init__(
        self,
        region_algebra: AlgebraSpan,
        contexts: Sequence[Context],
        generators: Sequence[GeneratorDecl] = (),
        include_trivial_context: bool = True,
    ):
        self.region_algebra = region_algebra
        self.contexts: list[Context] = list(contexts)
        self.generators: tuple[GeneratorDecl, ...] = tuple(generators)
        self.include_trivial_context = include_trivial_context
        self._index = {c.span: c.id for c in self.contexts}
        self.leq: list[list[bool]] = [
            [cj.span.contains(ci.span) for cj in self.contexts] for ci in self.contexts
        ]
        self._restriction: dict[tuple[int, AlgebraSpan], int] = {}

    def __len__(self) -> int:
        return len(self.contexts)

    def __iter__(self):
        return iter(self.contexts)

    def __getitem__(self, i: int) -> Context:
        return self.contexts[i]

    def find(self, span: AlgebraSpan) -> Optional[int]:
        return self._index.get(span)

    def bottom(self) -> Optional[int]:
        """The element below all others, if one exists."""
        return self.least(range(len(self)))

    def least(self, ids: Iterable[int]) -> Optional[int]:
        """Least element of a subset, or None when it has none."""
        members = list(ids)
        for i in members:
            if all(self.leq[i][j] for j in members):
                return i
        return None

    def maximal(self) -> list[int]:
        n = len(self)
        return [i for i in range(n) if not any(self.leq[i][j] and i != j for j in range(n))]

    def upper_bounds(self, ids: Iterable[int]) -> list[int]:
        members = list(ids)
        return [j for j in range(len(self)) if all(self.leq[i][j] for i in members)]

    def meet(self, i: int, j: int) -> int:
        return self._require(intersect(self.contexts[i].span, self.contexts[j].span), "meet")

    def restriction(self, i: int, algebra: AlgebraSpan) -> int:
        """Index of contexts[i] intersected with `algebra` (memoized)."""
        key = (i, algebra)
        hit = self._restriction.get(key)
        if hit is None:
            hit = self._require(intersect(self.contexts[i].span, algebra), "restriction")
            self._restriction[key] = hit
        return hit

    def record_restriction(self, i: int, algebra: AlgebraSpan, j: int) -> None:
        self._restriction[(i, algebra)] = j

    def _require(self, span: AlgebraSpan, what: str) -> int:
        idx = self.find(span)
        if idx is None:
            raise ContextClosureException(
                f"Context poset is not closed: {what} of dimension {span.dim} is missing",
                details={"dim": span.dim, "poset_size": len(self)},
            )
        return idx

    def members_within(self, algebra: AlgebraSpan) -> list[int]:
        return [c.id for c in self.contexts if algebra.contains(c.span)]

    def restrict(self, algebra: AlgebraSpan) -> "ContextPoset":
        """Sub-poset of the contexts contained in `algebra`, re-indexed."""
        kept = self.members_within(algebra)
        contexts = [
            Context(new_id, self.contexts[old].span, self.contexts[old].generators,
                    self.contexts[old].name)
            for new_id, old in enumerate(kept)
        ]
        gens = [g for g in self.generators if algebra.contains_matrix(g.matrix)]
        return ContextPoset(algebra, contexts, gens, self.include_trivial_context)

    def is_meet_closed(self) -> bool:
        n = len(self)
        for i in range(n):
            for j in range(i + 1, n):
                if self.find(intersect(self.contexts[i].span, self.contexts[j].span)) is None:
                    return False
        return True

    def describe(self) -> list[dict]:
        return [
            {"id": c.id, "name": c.name, "dim": c.dim, "generators": list(c.generators)}
            for c in self.contexts
        ]

    def __repr__(self) -> str:
        return f"ContextPoset(size={len(self)}, region_dim={self.region_algebra.dim})"


class TautologicalCopresheaf:
    """C -> C itself; restriction along C <= C' is subspace inclusion."""

    def __init__(self, poset: ContextPoset):
        self.poset = poset

    def assignment(self, i: int) -> AlgebraSpan:
        return self.poset.contexts[i].span

    def check_functorial(self) -> bool:
        n = len(self.poset)
        for i in range(n):
            for j in range(n):
                if self.poset.leq[i][j] and not self.assignment(j).contains(self.assignment(i)):
                    return False
        return True


def commutation_graph(gens: Sequence[GeneratorDecl]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(gens)))
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gens[i].matrix.commutes_with(gens[j].matrix):
                graph.add_edge(i, j)
    return graph


def _context_name(span: AlgebraSpan, gens: Sequence[GeneratorDecl], labels: Sequence[str]) -> str:
    if labels:
        labels = list(labels)
    else:
        labels = [g.label for g in gens if span.contains_matrix(g.matrix)]
    if not labels:
        return "<I>" if span.dim == 1 else f"<dim {span.dim}>"
    return "<" + ", ".join(labels) + ">"


def build_context_poset(
    region_algebra: AlgebraSpan,
    gens: Sequence[GeneratorDecl],
    closure_algebras: Sequence[AlgebraSpan] = (),
    include_trivial_context: Optional[bool] = None,
    maximal_cliques_only: bool = False,
    context_cap: Optional[int] = None,
    cliques: Optional[Sequence[Sequence[int]]] = None,
) -> ContextPoset:
    """
    Contexts generated by commuting subsets of `gens`, closed under pairwise
    intersection and under intersection with every algebra in `closure_algebras`.

    `cliques` replaces the enumeration with explicit generator index sets.
    """
    include_trivial = (
        settings.include_trivial_context if include_trivial_context is None
        else include_trivial_context
    )
    cap = context_cap or settings.context_cap
    d = region_algebra.ambient_dim

    for g in gens:
        if not region_algebra.contains_matrix(g.matrix):
            raise AlgebraMembershipException(
                f"Generator '{g.label}' does not lie in the region algebra",
                details={"label": g.label, "region_dim": region_algebra.dim},
            )

    found: dict[AlgebraSpan, tuple[str, ...]] = {}
    order: list[AlgebraSpan] = []

    def add(span: AlgebraSpan, labels: tuple[str, ...] = ()) -> bool:
        if span in found:
            if labels and not found[span]:
                found[span] = labels
            return False
        if len(found) >= cap:
            raise CapExceededException(
                f"Context poset exceeds cap of {cap}",
                cap=cap,
                details={"region_dim": region_algebra.dim},
            )
        found[span] = labels
        order.append(span)
        return True

    if include_trivial:
        add(AlgebraSpan.trivial(d))

    single = {k: generate_subalgebra(d, [g.matrix]) for k, g in enumerate(gens)}
    graph = commutation_graph(gens)
    if cliques is not None:
        for clique in cliques:
            if not all(graph.has_edge(a, b) for a in clique for b in clique if a < b):
                raise ContextClosureException(
                    "Explicit context contains non-commuting generators",
                    details={"generators": [gens[k].label for k in clique]},
                )
        chosen: Iterable[Sequence[int]] = cliques
    elif maximal_cliques_only:
        chosen = nx.find_cliques(graph)
    else:
        chosen = nx.enumerate_all_cliques(graph)
    built: dict[frozenset[int], AlgebraSpan] = {}
    for clique in chosen:
        members = sorted(clique)
        key = frozenset(members)
        prefix = frozenset(members[:-1])
        if prefix in built:
            span = join(built[prefix], single[members[-1]])
        else:
            span = single[members[0]]
            for k in members[1:]:
                span = join(span, single[k])
        built[key] = span
        add(span, tuple(gens[k].label for k in members))

    if maximal_cliques_only and cliques is None:
        # find_cliques skips isolated sub-cliques; singletons still matter for closure
        for k in range(len(gens)):
            if not graph.degree(k):
                add(single[k], (gens[k].label,))

    closed: list[AlgebraSpan] = []
    restrictions: list[tuple[AlgebraSpan, AlgebraSpan, AlgebraSpan]] = []
    queue = list(order)
    while queue:
        c = queue.pop(0)
        for other in list(closed):
            add_span = intersect(c, other)
            if add(add_span):
                queue.append(add_span)
        for algebra in closure_algebras:
            image = intersect(c, algebra)
            restrictions.append((c, algebra, image))
            if add(image):
                queue.append(image)
        closed.append(c)

    for span in order:
        if not is_commutative(span):
            raise ContextClosureException(
                "Clique of commuting generators produced a non-commutative span",
                details={"dim": span.dim},
            )

    ordered = sorted(order, key=lambda s: (s.dim, s.key()))
    contexts: list[Context] = []
    seen_names: set[str] = set()
    for i, s in enumerate(ordered):
        name = _context_name(s, gens, found[s])
        if name in seen_names:
            name = f"{name}#{i}"
        seen_names.add(name)
        contexts.append(Context(i, s, found[s], name))
    poset = ContextPoset(region_algebra, contexts, gens, include_trivial)
    for c, algebra, image in restrictions:
        poset.record_restriction(poset.find(c), algebra, poset.find(image))

    logger.debug(
        f"Context poset over dim {region_algebra.dim}: {len(gens)} generators, "
        f"{len(poset)} contexts"
    )
    return poset

