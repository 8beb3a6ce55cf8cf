"""Pullback posets of context posets over a family of slice opens."""

from dataclasses import dataclass
from typing import Optional, Sequence

from app.algebra.spans import AlgebraSpan
from app.contexts.poset import ContextPoset
from app.core.exceptions import CoverException
from app.net.contexts import NetContexts
from app.net.net import SliceNet
from app.spacetime.slice import SliceOpen

Element = tuple[int, ...]


@dataclass
class PullbackPoset:
    """
    Tuples (C_1, ..., C_k), C_a in C(A(U_a)), that agree on every pairwise overlap:
    C_a n A(U_a n U_b) = C_b n A(U_a n U_b). Ordered componentwise.

    Components are ids of the net-wide context poset.
    """

    pieces: tuple[SliceOpen, ...]
    algebras: tuple[AlgebraSpan, ...]
    poset: ContextPoset
    elements: list[Element]

    def __post_init__(self):
        self.index = {x: k for k, x in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.index

    def leq(self, x: Element, y: Element) -> bool:
        return all(self.poset.leq[a][b] for a, b in zip(x, y))

    def bottom(self) -> Optional[Element]:
        for x in self.elements:
            if all(self.leq(x, y) for y in self.elements):
                return x
        return None

    def name(self, x: Element) -> str:
        return "(" + ", ".join(self.poset[c].name for c in x) + ")"


def build_pullback(
    slice_net: SliceNet,
    contexts: NetContexts,
    pieces: Sequence[SliceOpen],
) -> PullbackPoset:
    """Backtrack over pieces, pruning as soon as a new component disagrees on an overlap."""
    if not pieces or any(p.is_empty for p in pieces):
        raise CoverException(
            "Pullback needs nonempty slice opens",
            details={"pieces": [str(p) for p in pieces]},
        )
    pieces = tuple(pieces)
    algebras = tuple(slice_net.evaluate(p) for p in pieces)
    choices = [contexts.ids_within(a) for a in algebras]
    overlaps = {
        (a, b): slice_net.evaluate(pieces[a].intersection(pieces[b]))
        for a in range(len(pieces))
        for b in range(a)
    }

    elements: list[Element] = []
    current: list[int] = []

    def visit(a: int) -> None:
        if a == len(pieces):
            elements.append(tuple(current))
            return
        for c in choices[a]:
            if all(
                contexts.restriction(c, overlaps[(a, b)])
                == contexts.restriction(current[b], overlaps[(a, b)])
                for b in range(a)
            ):
                current.append(c)
                visit(a + 1)
                current.pop()

    visit(0)
    return PullbackPoset(pieces, algebras, contexts.global_poset, sorted(elements))
