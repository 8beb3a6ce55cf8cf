"""Tests for pullbacks, comparison maps, left adjoints, cover checks and the theorem verdict."""

import pytest

from app.core.exceptions import (
    CapExceededException,
    ContextClosureException,
    CoverException,
)
from app.algebra.spans import AlgebraSpan
from app.descent.bohrification import bohrified_net, bohrify
from app.descent.checker import (
    analyse_pieces,
    check_cover,
    check_descent_local,
    enumerate_covers,
    three_pieces,
)
from app.descent.pullback import build_pullback
from app.descent.theorem import CONSISTENT, NOT_APPLICABLE, theorem_check
from app.spacetime.regions import diamond_of_interval
from app.spacetime.slice import SliceOpen
from tests.conftest import PAULI_X, PAULI_Z, make_generator, prepared_net


def cover(text_u: str, text_v: str) -> tuple[SliceOpen, SliceOpen]:
    return SliceOpen.parse(text_u), SliceOpen.parse(text_v)


def names(prepared, element) -> set[str]:
    poset = prepared.contexts.global_poset
    return {poset[c].name for c in element}


class TestPullback:
    def test_disjoint_pieces_give_product(self, spin_chain_n2):
        pullback = build_pullback(
            spin_chain_n2.slice_net, spin_chain_n2.contexts, list(cover("0", "1"))
        )
        assert len(pullback) == 9
        assert names(spin_chain_n2, pullback.bottom()) == {"<I>"}

    def test_overlap_forces_agreement(self, constant_commutative):
        pullback = build_pullback(
            constant_commutative.slice_net,
            constant_commutative.contexts,
            list(cover("0-1", "1-2")),
        )
        # both pieces carry the same algebra, so components must coincide
        assert len(pullback) == 2
        assert all(x[0] == x[1] for x in pullback.elements)

    def test_empty_piece_rejected(self, spin_chain_n2):
        with pytest.raises(CoverException):
            build_pullback(
                spin_chain_n2.slice_net, spin_chain_n2.contexts, [SliceOpen.parse("")]
            )


class TestComparisonAndAdjoint:
    def test_spin_chain_cover_is_local(self, spin_chain_n2):
        analysis = analyse_pieces(
            spin_chain_n2.slice_net, spin_chain_n2.contexts, list(cover("0", "1"))
        )
        assert analysis.f.well_defined
        assert analysis.f.is_monotone()
        assert analysis.adjoint.exists
        assert analysis.adjoint.certified
        assert analysis.adjoint.monotone
        assert analysis.adjoint.join_agrees is True
        assert analysis.faithful.holds
        assert analysis.reason == "local"

    def test_constant_net_not_fully_faithful(self, constant_commutative):
        analysis = analyse_pieces(
            constant_commutative.slice_net,
            constant_commutative.contexts,
            list(cover("0", "1")),
        )
        assert analysis.adjoint.exists
        assert not analysis.faithful.holds
        assert analysis.pullback.name(analysis.faithful.witness) == "(<I>, <Z>)"
        assert analysis.pullback.name(analysis.faithful.image) == "(<Z>, <Z>)"
        assert analysis.reason == "not local: left adjoint exists but not fully faithful"

    def test_global_qubit_has_no_left_adjoint(self, global_qubit):
        analysis = analyse_pieces(
            global_qubit.slice_net, global_qubit.contexts, list(cover("0", "1"))
        )
        assert not analysis.adjoint.exists
        assert names(global_qubit, analysis.adjoint.witness) == {"<X>", "<Z>"}
        assert analysis.adjoint.upper_set_size == 0
        assert analysis.reason == "not local: no left adjoint"

    def test_comparison_map_of_correlated_context(self, spin_chain_zz):
        analysis = analyse_pieces(
            spin_chain_zz.slice_net, spin_chain_zz.contexts, list(cover("0", "1"))
        )
        poset = spin_chain_zz.contexts.global_poset
        zz = next(c.id for c in poset if c.name == "<ZZ>")
        assert analysis.pullback.name(analysis.f(zz)) == "(<I>, <I>)"
        assert analysis.local


class TestCovers:
    def test_two_site_covers(self, spin_chain_n2):
        covers = enumerate_covers(spin_chain_n2.slice_net)
        assert covers == [cover("0", "1"), cover("1", "0")]

    def test_cover_cap(self, spin_chain_n2):
        with pytest.raises(CapExceededException) as exc:
            enumerate_covers(spin_chain_n2.slice_net, cap=1)
        assert exc.value.cap == 1

    def test_covers_are_not_nested(self, constant_commutative):
        for u, v in enumerate_covers(constant_commutative.slice_net):
            assert not (u <= v or v <= u)
            assert len(u.union(v).intervals) <= 2

    def test_three_pieces(self):
        pieces = three_pieces(*cover("0-1", "1-2"))
        assert pieces == [SliceOpen.parse("1"), SliceOpen.parse("0"), SliceOpen.parse("2")]
        assert three_pieces(*cover("0", "2")) == [SliceOpen.parse("0"), SliceOpen.parse("2")]

    def test_check_cover_rejects_outside_piece(self, spin_chain_n2):
        with pytest.raises(CoverException):
            check_cover(spin_chain_n2.slice_net, spin_chain_n2.contexts, *cover("0", "2"))

    def test_overlapping_cover_checks_three_pieces(self, constant_commutative):
        report = check_cover(
            constant_commutative.slice_net,
            constant_commutative.contexts,
            *cover("0-1", "1-2"),
        )
        assert report.overlapping
        assert report.local
        assert report.surjection is True
        assert report.three_piece is not None
        assert not report.three_piece.local
        assert report.three_piece_agrees is False

    def test_report_to_dict(self, constant_commutative):
        data = check_cover(
            constant_commutative.slice_net, constant_commutative.contexts, *cover("0", "1")
        ).to_dict()
        assert data["cover"] == ["0", "1"]
        assert data["local"] is False
        # non-local says nothing about surjectivity
        assert data["surjection"] is None
        assert data["fully_faithful"]["witness"] == "(<I>, <Z>)"
        assert data["intersection_identities"]["hold"] is False
        assert "three_piece" not in data

    def test_identities_track_fl(self, spin_chain_n2, constant_commutative, global_qubit):
        for prepared in (spin_chain_n2, constant_commutative, global_qubit):
            for report in check_descent_local(prepared.slice_net, prepared.contexts):
                assert report.fl_identity == report.identities_hold


class TestTheorem:
    @pytest.mark.parametrize(
        "fixture, strongly_local",
        [
            ("spin_chain_n2", True),
            ("spin_chain_zz", True),
            ("constant_commutative", False),
            ("global_qubit", False),
        ],
    )
    def test_biconditional_consistent(self, request, fixture, strongly_local):
        prepared = request.getfixturevalue(fixture)
        verdict = theorem_check(prepared.net, prepared.contexts)
        assert verdict.applicable
        assert verdict.strong_locality.holds is strongly_local
        assert verdict.descent_local is strongly_local
        assert verdict.biconditional == CONSISTENT
        assert verdict.identities_match
        assert verdict.converse_locality
        assert verdict.einstein_implies_strong

    def test_non_additive_net_not_applicable(self, custom_net):
        verdict = theorem_check(custom_net.net, custom_net.contexts)
        assert not verdict.applicable
        assert verdict.biconditional == NOT_APPLICABLE
        assert verdict.consistent
        assert any("not additive" in note for note in verdict.notes)

    def test_three_piece_summary_not_binding_without_strong_locality(self, constant_commutative):
        verdict = theorem_check(constant_commutative.net, constant_commutative.contexts)
        summary = verdict.three_piece_summary()
        assert summary["binding"] is False
        assert summary["consistent"] is None
        assert summary["disagreement_count"] >= 1
        assert ["0-1", "1-2"] in summary["disagreements"]

    def test_geometric_surjection_undecided_when_not_local(self, global_qubit):
        verdict = theorem_check(global_qubit.net, global_qubit.contexts)
        assert not verdict.descent_local
        assert verdict.to_dict()["theorem"]["geometric_surjection"] is None
        assert any(r.surjection is None for r in verdict.reports)
        assert all(r.surjection is True for r in verdict.reports if r.local)

    def test_to_dict(self, spin_chain_n2):
        data = theorem_check(spin_chain_n2.net, spin_chain_n2.contexts).to_dict()
        assert data["theorem"]["covers"] == 2
        assert data["theorem"]["local_covers"] == 2
        assert data["theorem"]["geometric_surjection"] is True
        assert set(data["axioms"]) == {
            "isotony",
            "causal_locality",
            "slice_locality",
            "additivity",
            "strong_locality",
            "einstein_causality",
        }

    @pytest.mark.slow
    def test_four_site_chain(self):
        prepared = prepared_net("spin_chain_n4")
        assert len(prepared.contexts.global_poset) == 81
        verdict = theorem_check(prepared.net, prepared.contexts)
        assert verdict.biconditional == CONSISTENT
        assert verdict.strong_locality.holds
        assert verdict.descent_local
        assert verdict.identities_match
        assert all(r.analysis.adjoint.violations == 0 for r in verdict.reports)
        assert all(r.analysis.adjoint.certified for r in verdict.reports)
        # overlapping covers exist here, so the three-piece reduction is binding
        summary = verdict.three_piece_summary()
        assert summary["checked"] > 0
        assert summary["binding"] is True
        assert summary["disagreement_count"] == 0
        assert summary["consistent"] is True


class TestBohrification:
    def test_spin_chain_functorial(self, spin_chain_n2):
        bohr = bohrified_net(spin_chain_n2.net, spin_chain_n2.contexts)
        assert bohr.functorial
        assert bohr.epsilon_inclusions
        assert not bohr.is_constant()

    def test_constant_net_is_constant(self, constant_commutative):
        bohr = bohrified_net(constant_commutative.net, constant_commutative.contexts)
        assert bohr.is_constant()
        assert bohr.functorial

    def test_space_points_and_sections(self, spin_chain_n2):
        net = spin_chain_n2.net
        bohr = bohrified_net(net, spin_chain_n2.contexts)
        full = net.regions.find(diamond_of_interval(0, 1, net.window))
        space = bohr.space(full)
        assert space.points == 9
        opens = space.opens()
        assert frozenset() in opens
        top = frozenset(range(space.points))
        assert set(space.sections(top)) == set(range(space.points))

    def test_structure_maps_only_along_inclusions(self, spin_chain_n2):
        net = spin_chain_n2.net
        bohr = bohrified_net(net, spin_chain_n2.contexts)
        regions = net.regions
        pairs = [
            (i, j)
            for i in range(len(regions))
            for j in range(len(regions))
            if not regions.leq(i, j)
        ]
        i, j = pairs[0]
        with pytest.raises(ContextClosureException):
            bohr.structure_map(i, j)

    def test_bohrify_single_algebra(self):
        gens = [make_generator("X", PAULI_X), make_generator("Z", PAULI_Z)]
        space = bohrify(AlgebraSpan.full(2), gens)
        assert space.points == 3
        # {}, {X}, {Z}, {X, Z}, everything
        assert len(space.opens()) == 5
        sections = space.sections(frozenset({0, 1, 2}))
        assert all(space.poset[i].span == s for i, s in sections.items())
