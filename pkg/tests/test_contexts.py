"""Tests for context posets, intersection functors and Alexandrov opens."""

import pytest

from app.algebra.matrices import Mat, tensor_embed
from app.algebra.spans import AlgebraSpan, generate_subalgebra
from app.contexts.functor import intersection_functor
from app.contexts.opens import alexandrov_opens, is_up_closed
from app.contexts.poset import TautologicalCopresheaf, build_context_poset
from app.core.exceptions import (
    AlgebraMembershipException,
    CapExceededException,
    ContextClosureException,
)
from tests.conftest import PAULI_X, PAULI_Z, make_generator


@pytest.fixture
def qubit_gens():
    return [make_generator("X", PAULI_X), make_generator("Z", PAULI_Z)]


@pytest.fixture
def two_qubit_gens():
    x, z = Mat.from_entries(PAULI_X), Mat.from_entries(PAULI_Z)
    gens = []
    for site in range(2):
        for label, m in (("X", x), ("Z", z)):
            gens.append(
                make_generator(f"{label}{site}", tensor_embed(m, [2, 2], site).to_json())
            )
    return gens


class TestContextPoset:
    def test_qubit_contexts(self, qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(2), qubit_gens)
        assert len(poset) == 3
        assert [c.name for c in poset][0] == "<I>"
        assert {c.name for c in poset} == {"<I>", "<X>", "<Z>"}
        bottom = poset.bottom()
        assert bottom is not None and poset[bottom].dim == 1
        assert sorted(poset[i].name for i in poset.maximal()) == ["<X>", "<Z>"]

    def test_without_trivial_context(self, qubit_gens):
        poset = build_context_poset(
            AlgebraSpan.full(2), qubit_gens, include_trivial_context=False
        )
        # <X> n <Z> = <I> is added back by intersection closure
        assert len(poset) == 3
        assert poset.include_trivial_context is False

    def test_trivial_context_only_from_seed(self):
        z = [make_generator("Z", PAULI_Z)]
        assert len(build_context_poset(AlgebraSpan.full(2), z)) == 2
        unseeded = build_context_poset(AlgebraSpan.full(2), z, include_trivial_context=False)
        assert len(unseeded) == 1
        assert unseeded.bottom() == 0

    def test_two_qubit_products(self, two_qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(4), two_qubit_gens)
        # one of {I, X, Z} per site
        assert len(poset) == 9
        assert poset.is_meet_closed()
        assert max(c.dim for c in poset) == 4

    def test_order_matrix(self, qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(2), qubit_gens)
        by_name = {c.name: c.id for c in poset}
        assert poset.leq[by_name["<I>"]][by_name["<X>"]]
        assert not poset.leq[by_name["<X>"]][by_name["<Z>"]]
        assert poset.meet(by_name["<X>"], by_name["<Z>"]) == by_name["<I>"]
        assert poset.least([by_name["<X>"], by_name["<Z>"]]) is None
        assert poset.upper_bounds([by_name["<X>"], by_name["<Z>"]]) == []

    def test_closure_algebras_add_restrictions(self, two_qubit_gens):
        site0 = generate_subalgebra(4, [two_qubit_gens[0].matrix, two_qubit_gens[1].matrix])
        poset = build_context_poset(
            AlgebraSpan.full(4), two_qubit_gens, closure_algebras=[site0]
        )
        for c in poset:
            image = poset.restriction(c.id, site0)
            assert site0.contains(poset[image].span)
            assert c.span.contains(poset[image].span)

    def test_restrict_reindexes(self, two_qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(4), two_qubit_gens)
        site0 = generate_subalgebra(4, [two_qubit_gens[0].matrix, two_qubit_gens[1].matrix])
        sub = poset.restrict(site0)
        assert len(sub) == 3
        assert [c.id for c in sub] == [0, 1, 2]
        assert {g.label for g in sub.generators} == {"X0", "Z0"}

    def test_generator_outside_region_rejected(self, qubit_gens):
        diagonal = generate_subalgebra(2, [Mat.from_entries(PAULI_Z)])
        with pytest.raises(AlgebraMembershipException):
            build_context_poset(diagonal, qubit_gens)

    def test_explicit_non_commuting_clique_rejected(self, qubit_gens):
        with pytest.raises(ContextClosureException):
            build_context_poset(AlgebraSpan.full(2), qubit_gens, cliques=[[0, 1]])

    def test_context_cap(self, two_qubit_gens):
        with pytest.raises(CapExceededException) as exc:
            build_context_poset(AlgebraSpan.full(4), two_qubit_gens, context_cap=4)
        assert exc.value.cap == 4

    def test_tautological_ring_functorial(self, qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(2), qubit_gens)
        assert TautologicalCopresheaf(poset).check_functorial()


class TestIntersectionFunctor:
    def test_restriction_to_a_factor(self, two_qubit_gens):
        full = build_context_poset(AlgebraSpan.full(4), two_qubit_gens)
        site0 = generate_subalgebra(4, [two_qubit_gens[0].matrix, two_qubit_gens[1].matrix])
        small = full.restrict(site0)
        functor = intersection_functor(full, site0, small)
        assert functor.is_monotone()
        assert functor.preserves_bottom()
        table = dict(functor.table())
        assert table["<X0, Z1>"] == "<X0>"
        assert table["<Z1>"] == "<I>"

    def test_identity_functor_composes(self, qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(2), qubit_gens)
        ident = intersection_functor(poset, AlgebraSpan.full(2), poset)
        assert ident.mapping == tuple(range(len(poset)))
        assert ident.compose(ident).mapping == ident.mapping

    def test_needs_inclusion(self):
        diagonal = generate_subalgebra(2, [Mat.from_entries(PAULI_Z)])
        poset = build_context_poset(diagonal, [make_generator("Z", PAULI_Z)])
        with pytest.raises(AlgebraMembershipException):
            intersection_functor(poset, AlgebraSpan.full(2), poset)


class TestAlexandrovOpens:
    def test_qubit_opens(self, qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(2), qubit_gens)
        opens = alexandrov_opens(poset)
        # {}, {X}, {Z}, {X, Z}, everything
        assert len(opens) == 5
        assert all(is_up_closed(poset, o) for o in opens)
        assert frozenset(range(3)) in opens

    def test_chain_opens(self):
        poset = build_context_poset(AlgebraSpan.full(2), [make_generator("Z", PAULI_Z)])
        assert alexandrov_opens(poset) == [frozenset(), frozenset({1}), frozenset({0, 1})]

    def test_opens_cap(self, two_qubit_gens):
        poset = build_context_poset(AlgebraSpan.full(4), two_qubit_gens)
        with pytest.raises(CapExceededException):
            alexandrov_opens(poset, cap=3)
