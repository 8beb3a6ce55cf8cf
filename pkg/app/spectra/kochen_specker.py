"""Kochen-Specker checks: global sections of the spectral presheaf of a projection family."""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from app.algebra.spans import AlgebraSpan
from app.algebra.spectral import GeneratorDecl, projection_decl
from app.contexts.poset import ContextPoset, build_context_poset
from app.core.exceptions import DimensionMismatchException
from app.spectra.presheaf import SpectralPresheaf, build_spectral_presheaf
from app.spectra.sections import SectionCount, SectionSearch

logger = logging.getLogger(__name__)


@dataclass
class KSReport:
    """Verdict of a Kochen-Specker run."""

    dimension: int
    projections: int
    contexts: int
    maximal_contexts: int
    sections: SectionCount
    low_dimension: bool
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if self.sections.count == 0 and self.sections.exact:
            return "contextual"
        return "non-contextual"

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "projections": self.projections,
            "contexts": self.contexts,
            "maximal_contexts": self.maximal_contexts,
            "sections": self.sections.count,
            "exact": self.sections.exact,
            "cap": self.sections.cap,
            "verdict": self.verdict,
            "low_dimension": self.low_dimension,
            "witnesses": self.sections.witnesses,
            "notes": self.notes,
        }


def prepare_ks(
    dimension: int,
    projections: Sequence[GeneratorDecl],
    bases: Optional[Sequence[Sequence[str]]] = None,
    include_trivial_context: Optional[bool] = None,
) -> tuple[ContextPoset, SpectralPresheaf]:
    """
    Context poset and spectral presheaf of a projection family.

    Without explicit `bases`, contexts come from maximal commuting subsets.
    With them, every projection also gets its own context so that adding a
    basis can only remove sections.
    """
    gens: list[GeneratorDecl] = []
    for p in projections:
        if p.matrix.dim != dimension:
            raise DimensionMismatchException(
                f"Projection '{p.label}' has dimension {p.matrix.dim}, expected {dimension}",
                details={"label": p.label, "expected": dimension, "actual": p.matrix.dim},
            )
        gens.append(projection_decl(p.label, p.matrix))

    ambient = AlgebraSpan.full(dimension)
    if bases is None:
        poset = build_context_poset(
            ambient, gens,
            include_trivial_context=include_trivial_context,
            maximal_cliques_only=True,
        )
    else:
        index = {g.label: k for k, g in enumerate(gens)}
        cliques = [[k] for k in range(len(gens))]
        cliques += [sorted(index[label] for label in basis) for basis in bases]
        poset = build_context_poset(
            ambient, gens,
            include_trivial_context=include_trivial_context,
            cliques=cliques,
        )
    return poset, build_spectral_presheaf(poset)


def ks_check(
    dimension: int,
    projections: Sequence[GeneratorDecl],
    cap: Optional[int] = None,
    bases: Optional[Sequence[Sequence[str]]] = None,
    include_trivial_context: Optional[bool] = None,
) -> KSReport:
    """Build contexts, count global sections, and report (non-)contextuality."""
    poset, presheaf = prepare_ks(dimension, projections, bases, include_trivial_context)
    sections = SectionSearch(poset, presheaf, cap).run()
    return build_ks_report(dimension, projections, poset, sections)


def build_ks_report(
    dimension: int,
    projections: Sequence[GeneratorDecl],
    poset: ContextPoset,
    sections: SectionCount,
) -> KSReport:
    low = dimension <= 2
    notes = []
    if low:
        notes.append("dimension <= 2: Kochen-Specker obstructions cannot occur here")
    if not sections.exact:
        notes.append(f"section count is a lower bound (cap {sections.cap})")
    logger.info(
        f"KS: d={dimension}, {len(projections)} projections, {len(poset)} contexts, "
        f"sections={sections.count}{'' if sections.exact else '+'}"
    )
    return KSReport(
        dimension=dimension,
        projections=len(projections),
        contexts=len(poset),
        maximal_contexts=len(poset.maximal()),
        sections=sections,
        low_dimension=low,
        notes=notes,
    )


def nested_section_counts(
    dimension: int,
    projections: Sequence[GeneratorDecl],
    bases: Sequence[Sequence[str]],
    cap: Optional[int] = None,
) -> list[int]:
    """Section counts after adding bases one at a time; never increasing."""
    counts = []
    for k in range(len(bases) + 1):
        poset, presheaf = prepare_ks(dimension, projections, bases[:k])
        counts.append(SectionSearch(poset, presheaf, cap).run().count)
    return counts
