"""Axiom checkers for nets: isotony, locality, additivity, strong locality, Einstein causality."""

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from app.algebra.spans import (
    AlgebraSpan,
    commutation_witness,
    commute,
    intersect,
    join,
)
from app.net.contexts import NetContexts
from app.net.net import Net, SliceNet
from app.spacetime.regions import diamond_of_interval
from app.spacetime.slice import SliceOpen

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
FAILED_PRECONDITION = "failed_precondition"


@dataclass
class AxiomVerdict:
    """Outcome of one axiom check; `witness` describes the first violation found."""

    name: str
    status: str
    checked: int = 0
    witness: Optional[dict[str, Any]] = None
    details: dict[str, Any] = field(default_factory=dict)
    causal: Optional["AxiomVerdict"] = None

    @property
    def holds(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"status": self.status, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details:
            out["details"] = self.details
        if self.causal is not None:
            out["causal_locality"] = self.causal.status
        return out


def _region_label(net: Net, k: int) -> dict[str, Any]:
    region = net.regions.region(k)
    return {"sites": list(region.sites()), "size": len(region)}


def _generator_witness(net: Net, a1: AlgebraSpan, a2: AlgebraSpan) -> Optional[list[str]]:
    """First pair of declared generators, one in each algebra, that fail to commute."""
    gens = net.generators()
    inside1 = [g for g in gens if a1.contains_matrix(g.matrix)]
    inside2 = [g for g in gens if a2.contains_matrix(g.matrix)]
    for g1 in inside1:
        for g2 in inside2:
            if not g1.matrix.commutes_with(g2.matrix):
                return [g1.label, g2.label]
    return None


def _algebra_pairs(net: Net) -> list[tuple[int, int]]:
    """Spacelike region pairs, one representative per distinct (A(O1), A(O2))."""
    seen: set[tuple[AlgebraSpan, AlgebraSpan]] = set()
    pairs: list[tuple[int, int]] = []
    for i, j in net.regions.spacelike_pairs():
        key = (net.evaluate_index(i), net.evaluate_index(j))
        if key in seen or (key[1], key[0]) in seen:
            continue
        seen.add(key)
        pairs.append((i, j))
    return pairs


def check_isotony(net: Net) -> AxiomVerdict:
    checked = 0
    seen: set[tuple[AlgebraSpan, AlgebraSpan]] = set()
    for i, j in net.regions.comparable_pairs():
        a1, a2 = net.evaluate_index(i), net.evaluate_index(j)
        if (a1, a2) in seen:
            continue
        seen.add((a1, a2))
        checked += 1
        if not a2.contains(a1):
            return AxiomVerdict(
                "isotony", FAIL, checked,
                witness={"smaller": _region_label(net, i), "larger": _region_label(net, j),
                         "dims": [a1.dim, a2.dim]},
            )
    return AxiomVerdict("isotony", PASS, checked)


def check_causal_locality(net: Net) -> AxiomVerdict:
    """A(O1) and A(O2) commute elementwise for every spacelike pair."""
    pairs = _algebra_pairs(net)
    for n, (i, j) in enumerate(pairs, start=1):
        a1, a2 = net.evaluate_index(i), net.evaluate_index(j)
        if commute(a1, a2):
            continue
        witness: dict[str, Any] = {"O1": _region_label(net, i), "O2": _region_label(net, j)}
        labels = _generator_witness(net, a1, a2)
        if labels is not None:
            witness["generators"] = labels
        else:
            pair = commutation_witness(a1, a2)
            if pair is not None:
                witness["elements"] = [pair[0].to_json(), pair[1].to_json()]
        return AxiomVerdict("causal_locality", FAIL, n, witness=witness)
    return AxiomVerdict("causal_locality", PASS, len(pairs))


def check_additivity(net: Net) -> AxiomVerdict:
    """A(O1 v O2) = A(O1) v A(O2) for diamonds over consecutive slice intervals."""
    window = net.window
    sites = list(window.sites)
    checked = 0
    for a in sites:
        for b in sites:
            if b < a:
                continue
            for c in sites:
                if c <= b:
                    continue
                o1 = diamond_of_interval(a, b, window)
                o2 = diamond_of_interval(b + 1, c, window)
                i, j = net.regions.find(o1), net.regions.find(o2)
                if i is None or j is None:
                    continue
                whole = net.evaluate_index(net.regions.join(i, j))
                parts = join(net.evaluate(o1), net.evaluate(o2))
                checked += 1
                if whole != parts:
                    return AxiomVerdict(
                        "additivity", FAIL, checked,
                        witness={
                            "O1": [a, b], "O2": [b + 1, c],
                            "dim_join_region": whole.dim, "dim_join_algebras": parts.dim,
                        },
                    )
    return AxiomVerdict("additivity", PASS, checked)


def check_strong_locality(net: Net, contexts: NetContexts) -> AxiomVerdict:
    """
    Causal locality plus (C1 v C2) n A(O1) = C1 and (C1 v C2) n A(O2) = C2 for
    every spacelike pair and every pair of contexts of the two regions.
    """
    causal = check_causal_locality(net)
    if not causal.holds:
        return AxiomVerdict(
            "strong_locality", FAIL, 0,
            witness={"reason": "not causally local", **(causal.witness or {})},
            causal=causal,
        )
    poset = contexts.global_poset
    checked = 0
    for i, j in _algebra_pairs(net):
        a1, a2 = net.evaluate_index(i), net.evaluate_index(j)
        for c1 in contexts.ids_within(a1):
            s1 = poset[c1].span
            for c2 in contexts.ids_within(a2):
                s2 = poset[c2].span
                joined = join(s1, s2)
                checked += 1
                for side, algebra, expected in (("O1", a1, s1), ("O2", a2, s2)):
                    image = intersect(joined, algebra)
                    if image != expected:
                        found = poset.find(image)
                        return AxiomVerdict(
                            "strong_locality", FAIL, checked,
                            witness={
                                "O1": _region_label(net, i),
                                "O2": _region_label(net, j),
                                "C1": poset[c1].name,
                                "C2": poset[c2].name,
                                "side": side,
                                "intersection": poset[found].name if found is not None
                                else f"<dim {image.dim}>",
                            },
                            causal=causal,
                        )
    return AxiomVerdict("strong_locality", PASS, checked, causal=causal)


def check_einstein_causality(net: Net, causal: Optional[AxiomVerdict] = None) -> AxiomVerdict:
    """dim(A(O1) v A(O2)) = dim A(O1) * dim A(O2) for spacelike pairs of a local net."""
    causal = causal or check_causal_locality(net)
    if not causal.holds:
        return AxiomVerdict(
            "einstein_causality", FAILED_PRECONDITION, 0,
            witness={"reason": "not causally local"}, causal=causal,
        )
    pairs = _algebra_pairs(net)
    for n, (i, j) in enumerate(pairs, start=1):
        a1, a2 = net.evaluate_index(i), net.evaluate_index(j)
        joined = join(a1, a2)
        if joined.dim != a1.dim * a2.dim:
            return AxiomVerdict(
                "einstein_causality", FAIL, n,
                witness={
                    "O1": _region_label(net, i), "O2": _region_label(net, j),
                    "dims": [a1.dim, a2.dim], "dim_join": joined.dim,
                },
                causal=causal,
            )
    return AxiomVerdict("einstein_causality", PASS, len(pairs), causal=causal)


def check_slice_locality(slice_net: SliceNet) -> AxiomVerdict:
    """Slice algebras of disjoint slice opens commute."""
    checked = 0
    seen: set[tuple[AlgebraSpan, AlgebraSpan]] = set()
    for u, v in slice_net.slice.disjoint_pairs():
        a1, a2 = slice_net.evaluate(u), slice_net.evaluate(v)
        if (a1, a2) in seen:
            continue
        seen.add((a1, a2))
        checked += 1
        if not commute(a1, a2):
            return AxiomVerdict(
                "slice_locality", FAIL, checked, witness={"U": str(u), "V": str(v)}
            )
    return AxiomVerdict("slice_locality", PASS, checked)


def slice_locality_for(slice_net: SliceNet, u: SliceOpen, v: SliceOpen) -> bool:
    return commute(slice_net.evaluate(u), slice_net.evaluate(v))
