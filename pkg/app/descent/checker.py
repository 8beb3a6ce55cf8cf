"""Descent checks over covers of slice opens."""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from app.algebra.spans import commute, intersect, is_commutative, join_all
from app.core.config import settings
from app.core.exceptions import CapExceededException, CoverException
from app.core.logging import get_structured_logger
from app.core.metrics import metrics_collector
from app.descent.adjoint import (
    ComparisonMap,
    FullFaithfulness,
    LeftAdjoint,
    check_fully_faithful,
    comparison_map,
    find_left_adjoint,
)
from app.descent.pullback import PullbackPoset, build_pullback
from app.net.contexts import NetContexts
from app.net.net import SliceNet
from app.spacetime.slice import SliceOpen

logger = logging.getLogger(__name__)
events = get_structured_logger()

Cover = tuple[SliceOpen, SliceOpen]


@dataclass
class CoverAnalysis:
    """Pullback, comparison map, left adjoint and full faithfulness for one family of pieces."""

    pullback: PullbackPoset
    f: ComparisonMap
    adjoint: LeftAdjoint
    faithful: FullFaithfulness

    @property
    def local(self) -> bool:
        return (
            self.f.well_defined
            and self.adjoint.exists
            and self.adjoint.certified
            and self.faithful.holds
        )

    @property
    def reason(self) -> str:
        if not self.f.well_defined:
            return "not local: comparison map leaves the pullback"
        if not self.adjoint.exists:
            return "not local: no left adjoint"
        if not self.adjoint.certified:
            return "not local: adjunction law violated"
        if not self.faithful.holds:
            return "not local: left adjoint exists but not fully faithful"
        return "local"


def _pieces_commute(slice_net: SliceNet, pieces: Sequence[SliceOpen]) -> bool:
    """The non-shared parts of every two pieces have commuting slice algebras."""
    for a in range(len(pieces)):
        for b in range(a):
            only_a = pieces[a].difference(pieces[b])
            only_b = pieces[b].difference(pieces[a])
            if only_a.is_empty or only_b.is_empty:
                continue
            if not commute(slice_net.evaluate(only_a), slice_net.evaluate(only_b)):
                return False
    return True


def analyse_pieces(
    slice_net: SliceNet, contexts: NetContexts, pieces: Sequence[SliceOpen]
) -> CoverAnalysis:
    pullback = build_pullback(slice_net, contexts, pieces)
    f = comparison_map(slice_net, contexts, pullback)
    adjoint = find_left_adjoint(f, locally_commuting=_pieces_commute(slice_net, pieces))
    faithful = check_fully_faithful(f, adjoint)
    return CoverAnalysis(pullback, f, adjoint, faithful)


def intersection_identities(
    slice_net: SliceNet, contexts: NetContexts, pullback: PullbackPoset
) -> tuple[bool, Optional[dict[str, Any]]]:
    """
    For every x in the pullback: the join J of its components is commutative and
    J n A(U_a) = C_a for each piece.
    """
    poset = contexts.global_poset
    d = slice_net.net.ambient_dim
    for x in pullback.elements:
        joined = join_all((poset[c].span for c in x), d)
        if not is_commutative(joined):
            return False, {"x": pullback.name(x), "reason": "join is not commutative"}
        for a, c in enumerate(x):
            if intersect(joined, pullback.algebras[a]) != poset[c].span:
                return False, {
                    "x": pullback.name(x),
                    "piece": str(pullback.pieces[a]),
                    "reason": "join restricted to the piece differs from the component",
                }
    return True, None


@dataclass
class DescentReport:
    """
    Per-cover verdict.

    `surjection` is derived from `local` only: a local morphism is a surjection,
    and a non-local one leaves surjectivity undecided (None).
    """

    u: SliceOpen
    v: SliceOpen
    analysis: CoverAnalysis
    identities_hold: bool
    identities_witness: Optional[dict[str, Any]] = None
    three_piece: Optional[CoverAnalysis] = None
    extras: dict[str, Any] = field(default_factory=dict)

    @property
    def overlapping(self) -> bool:
        return not self.u.intersection(self.v).is_empty

    @property
    def disjoint(self) -> bool:
        return not self.overlapping

    @property
    def local(self) -> bool:
        return self.analysis.local

    @property
    def surjection(self) -> Optional[bool]:
        return True if self.local else None

    @property
    def verdict(self) -> str:
        return self.analysis.reason

    @property
    def sort_key(self) -> tuple:
        return (self.u.sort_key(), self.v.sort_key())

    @property
    def fl_identity(self) -> bool:
        return self.analysis.adjoint.exists and self.analysis.faithful.holds

    @property
    def three_piece_agrees(self) -> Optional[bool]:
        if self.three_piece is None:
            return None
        return self.three_piece.local == self.local

    def to_dict(self) -> dict[str, Any]:
        a = self.analysis
        pullback = a.pullback
        out: dict[str, Any] = {
            "cover": [str(self.u), str(self.v)],
            "union": str(a.f.union),
            "overlapping": self.overlapping,
            "domain_size": len(a.f.domain),
            "pullback_size": len(pullback),
            "f_well_defined": a.f.well_defined,
            "f_monotone": a.f.is_monotone(),
            "left_adjoint": {
                "exists": a.adjoint.exists,
                "certified": a.adjoint.certified,
                "violations": a.adjoint.violations,
                "monotone": a.adjoint.monotone,
                "join_agrees": a.adjoint.join_agrees,
                "witness": pullback.name(a.adjoint.witness) if a.adjoint.witness else None,
            },
            "fully_faithful": {
                "holds": a.faithful.holds,
                "witness": pullback.name(a.faithful.witness) if a.faithful.witness else None,
                "f_of_L": pullback.name(a.faithful.image) if a.faithful.image else None,
            },
            "intersection_identities": {
                "hold": self.identities_hold,
                "witness": self.identities_witness,
            },
            "local": self.local,
            "surjection": self.surjection,
            "verdict": self.verdict,
            "certificate": "poset-level",
        }
        if self.three_piece is not None:
            out["three_piece"] = {
                "pieces": [str(p) for p in self.three_piece.pullback.pieces],
                "local": self.three_piece.local,
                "agrees": self.three_piece_agrees,
            }
        return out


def enumerate_covers(slice_net: SliceNet, cap: Optional[int] = None) -> list[Cover]:
    """
    Ordered pairs (U, V) of distinct, non-nested slice opens with at most two
    components each, whose union has at most two components.
    """
    limit = cap or settings.cover_cap
    opens = list(slice_net.slice.opens())
    covers: list[Cover] = []
    for u in opens:
        for v in opens:
            if u == v or u <= v or v <= u:
                continue
            if len(u.union(v).intervals) > 2:
                continue
            if len(covers) >= limit:
                raise CapExceededException(
                    f"Cover enumeration exceeds cap of {limit}",
                    cap=limit,
                    details={"window": slice_net.window.describe()},
                )
            covers.append((u, v))
    return sorted(covers, key=lambda c: (c[0].sort_key(), c[1].sort_key()))


def three_pieces(u: SliceOpen, v: SliceOpen) -> list[SliceOpen]:
    pieces = [u.intersection(v), u.difference(v), v.difference(u)]
    return [p for p in pieces if not p.is_empty]


def check_cover(
    slice_net: SliceNet, contexts: NetContexts, u: SliceOpen, v: SliceOpen
) -> DescentReport:
    for piece in (u, v):
        if piece.is_empty or not piece.within(slice_net.window):
            raise CoverException(
                f"Cover piece '{piece}' is empty or leaves the window",
                details={"piece": str(piece), "window": slice_net.window.describe()},
            )
    with metrics_collector.timed("descent_cover"):
        analysis = analyse_pieces(slice_net, contexts, [u, v])
        holds, witness = intersection_identities(slice_net, contexts, analysis.pullback)
        report = DescentReport(u, v, analysis, holds, witness)
        if report.overlapping:
            report.three_piece = analyse_pieces(slice_net, contexts, three_pieces(u, v))
    metrics_collector.increment("covers_checked")
    events.info_json(
        "descent_cover",
        net=slice_net.net.name,
        cover=[str(u), str(v)],
        verdict=report.verdict,
        pullback_size=len(analysis.pullback),
    )
    return report


def check_descent_local(
    slice_net: SliceNet,
    contexts: NetContexts,
    covers: Optional[Sequence[Cover]] = None,
) -> list[DescentReport]:
    """Sequential form; VerificationService runs the same per-cover checks concurrently."""
    if covers is None:
        covers = enumerate_covers(slice_net)
    reports = [check_cover(slice_net, contexts, u, v) for u, v in covers]
    return sorted(reports, key=lambda r: r.sort_key)
