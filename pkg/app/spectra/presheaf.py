"""External Gelfand spectra of contexts and the spectral presheaf over a context poset."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from app.algebra.matrices import Mat
from app.algebra.scalars import ExactScalar
from app.algebra.spectral import GeneratorDecl, spectral_projections
from app.contexts.poset import Context, ContextPoset
from app.core.exceptions import (
    AlgebraMembershipException,
    ContextClosureException,
    SpectrumException,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Character:
    """A point of a context's spectrum: a minimal projection and the values it reads off."""

    context: int
    index: int
    joint_projection: Mat
    values: tuple[tuple[str, ExactScalar], ...]

    def value(self, label: str) -> Optional[ExactScalar]:
        return dict(self.values).get(label)

    def describe(self) -> dict[str, object]:
        return {label: v.to_json() for label, v in self.values}


def spectrum_of_context(context: Context, gens: Sequence[GeneratorDecl]) -> list[Character]:
    """Characters as the nonzero products of one spectral projection per generator."""
    d = context.span.ambient_dim
    for g in gens:
        if not context.span.contains_matrix(g.matrix):
            raise AlgebraMembershipException(
                f"Generator '{g.label}' is not in context {context.name}",
                details={"label": g.label, "context": context.name},
            )
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if not a.matrix.commutes_with(b.matrix):
                raise SpectrumException(
                    f"Generators '{a.label}' and '{b.label}' do not commute",
                    details={"left": a.label, "right": b.label},
                )

    partial: list[tuple[Mat, tuple[tuple[str, ExactScalar], ...]]] = [(Mat.identity(d), ())]
    for g in gens:
        extended = []
        for p, values in partial:
            for lam, e in spectral_projections(g):
                q = p @ e
                if not q.is_zero():
                    extended.append((q, values + ((g.label, lam),)))
        partial = extended

    return [
        Character(context.id, k, p, tuple(sorted(values, key=lambda kv: kv[0])))
        for k, (p, values) in enumerate(partial)
    ]


def _eigenvalue(b: Mat, e: Mat) -> ExactScalar:
    """lambda with b e = lambda e, for a minimal projection e of a commutative algebra holding b."""
    be = b @ e
    if be.is_zero():
        return ExactScalar(0)
    lam = be.is_scalar_multiple(e)
    if lam is None:
        raise ContextClosureException("Projection is not minimal for the given element")
    return lam


def characters_by_partition(
    context: Context,
    upper: list[Character],
    gens: Sequence[GeneratorDecl],
) -> list[Character]:
    """
    Characters of a context sitting below a context with known characters.

    Minimal projections of the upper context are grouped by the eigenvalues
    every basis element of the lower context takes on them.
    """
    groups: dict[tuple[ExactScalar, ...], Mat] = {}
    for ch in upper:
        signature = tuple(_eigenvalue(b, ch.joint_projection) for b in context.span.basis)
        groups[signature] = (
            groups[signature] + ch.joint_projection if signature in groups else ch.joint_projection
        )
    contained = [g for g in gens if context.span.contains_matrix(g.matrix)]
    chars: list[Character] = []
    for k, signature in enumerate(sorted(groups, key=lambda s: [x.sort_key() for x in s])):
        p = groups[signature]
        values = tuple(sorted(((g.label, _eigenvalue(g.matrix, p)) for g in contained),
                              key=lambda kv: kv[0]))
        chars.append(Character(context.id, k, p, values))
    return chars


class SpectralPresheaf:
    """Characters per context plus restriction maps along every C <= C'."""

    def __init__(self, poset: ContextPoset, characters: list[list[Character]]):
        self.poset = poset
        self.characters = characters
        # restrictions[(upper, lower)][k] = index of the character of `lower` below character k
        self.restrictions: dict[tuple[int, int], tuple[int, ...]] = {}
        n = len(poset)
        for j in range(n):
            for i in range(n):
                if i != j and poset.leq[i][j]:
                    self.restrictions[(j, i)] = tuple(
                        self._dominating(i, ch) for ch in characters[j]
                    )

    def _dominating(self, lower: int, ch: Character) -> int:
        for cand in self.characters[lower]:
            if cand.joint_projection @ ch.joint_projection == ch.joint_projection:
                return cand.index
        raise ContextClosureException(
            "No dominating character found along a restriction",
            details={
                "upper": self.poset.contexts[ch.context].name,
                "lower": self.poset.contexts[lower].name,
            },
        )

    def restrict(self, upper: int, lower: int, k: int) -> int:
        if upper == lower:
            return k
        return self.restrictions[(upper, lower)][k]

    def check_functorial(self) -> bool:
        """Restriction composes along every chain i <= j <= k."""
        n = len(self.poset)
        leq = self.poset.leq
        for k in range(n):
            for j in range(n):
                if not leq[j][k]:
                    continue
                for i in range(n):
                    if not leq[i][j]:
                        continue
                    for c in range(len(self.characters[k])):
                        direct = self.restrict(k, i, c)
                        if direct != self.restrict(j, i, self.restrict(k, j, c)):
                            return False
        return True

    def check_completeness(self) -> bool:
        """Projections of each context sum to I and their count equals its dimension."""
        for i, ctx in enumerate(self.poset.contexts):
            chars = self.characters[i]
            total = Mat.zero(ctx.span.ambient_dim)
            for ch in chars:
                total = total + ch.joint_projection
            if total != Mat.identity(ctx.span.ambient_dim) or len(chars) != ctx.dim:
                return False
        return True


def build_spectral_presheaf(poset: ContextPoset) -> SpectralPresheaf:
    """Characters for every context; intersection-only contexts use a generated context above."""
    by_label = {g.label: g for g in poset.generators}
    n = len(poset)
    characters: list[Optional[list[Character]]] = [None] * n

    for ctx in poset.contexts:
        if ctx.generated:
            gens = [by_label[label] for label in ctx.generators]
            characters[ctx.id] = spectrum_of_context(ctx, gens)

    for ctx in poset.contexts:
        if characters[ctx.id] is not None:
            continue
        above = [
            j for j in range(n)
            if poset.leq[ctx.id][j] and poset.contexts[j].generated
        ]
        if not above:
            raise ContextClosureException(
                f"Context {ctx.name} lies below no generator-built context",
                details={"context": ctx.name},
            )
        upper = min(above, key=lambda j: poset.contexts[j].dim)
        characters[ctx.id] = characters_by_partition(
            ctx, characters[upper] or [], poset.generators
        )

    return SpectralPresheaf(poset, [c or [] for c in characters])
