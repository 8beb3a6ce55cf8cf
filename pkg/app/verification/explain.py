"""Human-readable trace of one cover: posets, f, L and the adjunction matrix."""

from dataclasses import dataclass
from typing import Optional

import pandas as pd

from app.core.exceptions import CoverException
from app.descent.checker import CoverAnalysis, analyse_pieces, intersection_identities
from app.net.contexts import NetContexts
from app.net.net import SliceNet
from app.spacetime.slice import SliceOpen


def parse_cover(text: str) -> tuple[SliceOpen, SliceOpen]:
    """"0-1;2" -> (U, V). Both pieces must be nonempty."""
    parts = text.split(";")
    if len(parts) != 2:
        raise CoverException(
            f"Cover '{text}' must have the form 'U;V'", details={"cover": text}
        )
    u, v = SliceOpen.parse(parts[0]), SliceOpen.parse(parts[1])
    if u.union(v).is_empty:
        raise CoverException(f"Cover '{text}' has an empty union", details={"cover": text})
    if u.is_empty or v.is_empty:
        raise CoverException(f"Cover '{text}' has an empty piece", details={"cover": text})
    return u, v


def poset_table(contexts: NetContexts, slice_net: SliceNet, u: SliceOpen) -> pd.DataFrame:
    poset = contexts.global_poset
    ids = contexts.ids_within(slice_net.evaluate(u))
    return pd.DataFrame(
        {
            "id": ids,
            "context": [poset[i].name for i in ids],
            "dim": [poset[i].dim for i in ids],
        }
    )


@dataclass
class ExplainTrace:
    u: SliceOpen
    v: SliceOpen
    analysis: CoverAnalysis
    posets: dict[str, pd.DataFrame]
    f_table: pd.DataFrame
    l_table: Optional[pd.DataFrame]
    adjunction: Optional[pd.DataFrame]
    identities_hold: bool

    def render(self) -> str:
        a = self.analysis
        lines = [f"Cover U = {self.u}, V = {self.v}, union {a.f.union}"]
        for label, table in self.posets.items():
            lines += ["", f"Contexts of {label}:", table.to_string(index=False)]
        lines += ["", "Comparison map f:", self.f_table.to_string(index=False)]
        if self.l_table is None:
            witness = a.adjoint.witness
            lines += [
                "",
                "No left adjoint: "
                f"{a.pullback.name(witness) if witness else '?'} has "
                f"{a.adjoint.upper_set_size} contexts above it and no least one",
            ]
        else:
            lines += ["", "Left adjoint L:", self.l_table.to_string(index=False)]
        if self.adjunction is not None:
            lines += [
                "",
                "Adjunction matrix (1: L(x) <= c and x <= f(c); 0: neither; ! mismatch):",
                self.adjunction.to_string(),
            ]
        lines += [
            "",
            f"Intersection identities: {'hold' if self.identities_hold else 'fail'}",
            f"Verdict: {a.reason}",
        ]
        return "\n".join(lines)


def explain_cover(
    slice_net: SliceNet, contexts: NetContexts, u: SliceOpen, v: SliceOpen
) -> ExplainTrace:
    for piece in (u, v):
        if not piece.within(slice_net.window):
            raise CoverException(
                f"Cover piece '{piece}' leaves the window",
                details={"piece": str(piece), "window": slice_net.window.describe()},
            )
    analysis = analyse_pieces(slice_net, contexts, [u, v])
    pullback, f, adjoint = analysis.pullback, analysis.f, analysis.adjoint
    poset = contexts.global_poset
    overlap = u.intersection(v)

    posets = {"U": poset_table(contexts, slice_net, u), "V": poset_table(contexts, slice_net, v)}
    if not overlap.is_empty:
        posets["U n V"] = poset_table(contexts, slice_net, overlap)
    posets["U u V"] = poset_table(contexts, slice_net, f.union)

    f_table = pd.DataFrame(
        {
            "C": [poset[c].name for c in f.domain],
            "f(C)": [pullback.name(f(c)) for c in f.domain],
            "in pullback": [f(c) in pullback for c in f.domain],
        }
    )

    l_table = adjunction = None
    if adjoint.exists:
        xs = pullback.elements
        l_table = pd.DataFrame(
            {
                "x": [pullback.name(x) for x in xs],
                "L(x)": [poset[adjoint.mapping[x]].name for x in xs],
                "f(L(x))": [pullback.name(f(adjoint.mapping[x])) for x in xs],
                "f(L(x)) = x": [f(adjoint.mapping[x]) == x for x in xs],
            }
        )

        def cell(x: tuple[int, ...], c: int) -> str:
            left = poset.leq[adjoint.mapping[x]][c]
            right = pullback.leq(x, f(c))
            if left != right:
                return "!"
            return "1" if left else "0"

        adjunction = pd.DataFrame(
            [[cell(x, c) for c in f.domain] for x in xs],
            index=[pullback.name(x) for x in xs],
            columns=[poset[c].name for c in f.domain],
        )

    holds, _ = intersection_identities(slice_net, contexts, pullback)
    return ExplainTrace(u, v, analysis, posets, f_table, l_table, adjunction, holds)
