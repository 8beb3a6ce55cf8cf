"""Intersection functor C(A2) -> C(A1), C -> C n A1, for an inclusion A1 <= A2."""

from dataclasses import dataclass

from app.algebra.spans import AlgebraSpan, intersect
from app.contexts.poset import ContextPoset
from app.core.exceptions import AlgebraMembershipException, ContextClosureException


@dataclass(frozen=True)
class IntersectionFunctor:
    """Monotone map between context posets, stored as an index table."""

    source: ContextPoset
    target: ContextPoset
    mapping: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def is_monotone(self) -> bool:
        n = len(self.source)
        for i in range(n):
            for j in range(n):
                if self.source.leq[i][j] and not self.target.leq[self.mapping[i]][self.mapping[j]]:
                    return False
        return True

    def preserves_bottom(self) -> bool:
        src, tgt = self.source.bottom(), self.target.bottom()
        if src is None or tgt is None:
            return src is None
        return self.mapping[src] == tgt

    def compose(self, after: "IntersectionFunctor") -> "IntersectionFunctor":
        """`after` applied to the image of self."""
        return IntersectionFunctor(
            self.source, after.target, tuple(after.mapping[j] for j in self.mapping)
        )

    def table(self) -> list[tuple[str, str]]:
        return [
            (self.source.contexts[i].name, self.target.contexts[j].name)
            for i, j in enumerate(self.mapping)
        ]


def intersection_functor(
    p2: ContextPoset,
    a1: AlgebraSpan,
    p1: ContextPoset,
) -> IntersectionFunctor:
    """Send each C in p2 to C n a1, located in p1."""
    if not p2.region_algebra.contains(a1):
        raise AlgebraMembershipException(
            "Intersection functor needs A1 contained in A2",
            details={"a1_dim": a1.dim, "a2_dim": p2.region_algebra.dim},
        )
    mapping: list[int] = []
    for c in p2.contexts:
        image = intersect(c.span, a1)
        idx = p1.find(image)
        if idx is None:
            raise ContextClosureException(
                f"Image of context {c.name} is missing from the target poset",
                details={"context": c.name, "image_dim": image.dim},
            )
        mapping.append(idx)
    return IntersectionFunctor(p2, p1, tuple(mapping))
