"""Strong locality versus descent by local geometric morphisms, checked on one net."""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from app.descent.checker import DescentReport, check_descent_local
from app.net.axioms import (
    AxiomVerdict,
    check_additivity,
    check_causal_locality,
    check_einstein_causality,
    check_isotony,
    check_slice_locality,
    check_strong_locality,
    slice_locality_for,
)
from app.net.contexts import NetContexts
from app.net.net import Net, SliceNet, restrict_to_slice

logger = logging.getLogger(__name__)

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"
NOT_APPLICABLE = "not applicable"

FINITE_MODEL_NOTE = (
    "Contexts are the subalgebras generated by commuting sets of declared generators, "
    "closed under intersection; verdicts certify poset-level adjunctions and are not "
    "claimed for the full context poset of each algebra."
)


@dataclass
class TheoremVerdict:
    isotony: AxiomVerdict
    causal_locality: AxiomVerdict
    slice_locality: AxiomVerdict
    additivity: AxiomVerdict
    strong_locality: AxiomVerdict
    einstein_causality: AxiomVerdict
    reports: list[DescentReport]
    notes: list[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return self.additivity.holds

    @property
    def descent_local(self) -> bool:
        return all(r.local for r in self.reports)

    @property
    def biconditional(self) -> str:
        if not self.applicable:
            return NOT_APPLICABLE
        return CONSISTENT if self.strong_locality.holds == self.descent_local else INCONSISTENT

    @property
    def consistent(self) -> bool:
        return self.biconditional != INCONSISTENT

    @property
    def converse_locality(self) -> bool:
        """Every disjoint cover certified local has commuting slice algebras."""
        return all(r.extras.get("commuting", True) for r in self.reports if r.disjoint and r.local)

    @property
    def identities_match(self) -> bool:
        """f o L = id exactly on the covers where the intersection identities hold."""
        return all(r.fl_identity == r.identities_hold for r in self.reports)

    @property
    def einstein_implies_strong(self) -> bool:
        return not self.einstein_causality.holds or self.strong_locality.holds

    @property
    def three_piece_binding(self) -> bool:
        """The three-piece reduction relies on additivity and strong locality."""
        return self.additivity.holds and self.strong_locality.holds

    def three_piece_summary(self) -> dict[str, Any]:
        overlapping = [r for r in self.reports if r.three_piece is not None]
        disagreements = [
            [str(r.u), str(r.v)] for r in overlapping if not r.three_piece_agrees
        ]
        return {
            "checked": len(overlapping),
            "disagreements": disagreements[:8],
            "disagreement_count": len(disagreements),
            "binding": self.three_piece_binding,
            "consistent": (not disagreements) if self.three_piece_binding else None,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "axioms": {
                "isotony": self.isotony.to_dict(),
                "causal_locality": self.causal_locality.to_dict(),
                "slice_locality": self.slice_locality.to_dict(),
                "additivity": self.additivity.to_dict(),
                "strong_locality": self.strong_locality.to_dict(),
                "einstein_causality": self.einstein_causality.to_dict(),
            },
            "theorem": {
                "applicable": self.applicable,
                "strongly_local": self.strong_locality.holds,
                "descent_local": self.descent_local,
                "biconditional": self.biconditional,
                "converse_locality": self.converse_locality,
                "identities_match": self.identities_match,
                "einstein_implies_strong": self.einstein_implies_strong,
                "geometric_surjection": True if self.descent_local else None,
                "three_piece": self.three_piece_summary(),
                "covers": len(self.reports),
                "local_covers": sum(r.local for r in self.reports),
            },
            "notes": list(self.notes),
        }


def mark_converse(slice_net: SliceNet, reports: list[DescentReport]) -> None:
    for r in reports:
        if r.disjoint and r.local:
            r.extras["commuting"] = slice_locality_for(slice_net, r.u, r.v)


def theorem_check(
    net: Net,
    contexts: Optional[NetContexts] = None,
    reports: Optional[list[DescentReport]] = None,
    include_trivial_context: Optional[bool] = None,
) -> TheoremVerdict:
    """
    Additivity first: without it the biconditional is not applicable. Strong
    locality and the descent verdict over all enumerated covers are then compared.
    """
    slice_net = contexts.slice_net if contexts is not None else restrict_to_slice(net)
    if contexts is None:
        contexts = NetContexts(slice_net, include_trivial_context=include_trivial_context)
    additivity = check_additivity(net)
    causal = check_causal_locality(net)
    strong = check_strong_locality(net, contexts)
    einstein = check_einstein_causality(net, causal)
    if reports is None:
        reports = check_descent_local(slice_net, contexts)
    mark_converse(slice_net, reports)

    verdict = TheoremVerdict(
        isotony=check_isotony(net),
        causal_locality=causal,
        slice_locality=check_slice_locality(slice_net),
        additivity=additivity,
        strong_locality=strong,
        einstein_causality=einstein,
        reports=sorted(reports, key=lambda r: r.sort_key),
        notes=[FINITE_MODEL_NOTE],
    )
    if not contexts.include_trivial_context:
        verdict.notes.append("Trivial context was not seeded (include_trivial_context = false).")
    if not verdict.applicable:
        verdict.notes.append("Net is not additive; the biconditional does not apply.")
    logger.info(
        f"Theorem check for '{net.name}': strongly local={strong.holds}, "
        f"descent local={verdict.descent_local}, {verdict.biconditional}"
    )
    return verdict
