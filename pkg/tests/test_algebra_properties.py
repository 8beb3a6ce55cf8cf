"""Seeded property checks for span operations and spectral projections over small algebras."""

import random
from fractions import Fraction

import pytest

from app.algebra.matrices import Mat
from app.algebra.scalars import ExactScalar
from app.algebra.spans import (
    AlgebraSpan,
    commutant,
    commute,
    generate_subalgebra,
    intersect,
    is_commutative,
    join,
)
from app.algebra.spectral import GeneratorDecl, spectral_projections

SEED = 20240611
CASES_PER_DIM = 350
SPECTRAL_CASES_PER_DIM = 120
DIMS = [2, 3, 4]


def random_hermitian(rng: random.Random, d: int) -> Mat:
    rows: dict[int, dict[int, ExactScalar]] = {}
    for i in range(d):
        rows.setdefault(i, {})[i] = ExactScalar(rng.randint(-2, 2))
        for j in range(i + 1, d):
            if rng.random() < 0.5:
                continue
            v = ExactScalar(rng.randint(-1, 1), rng.choice([0, 0, 1]))
            rows[i][j] = v
            rows.setdefault(j, {})[i] = v.conjugate()
    return Mat(d, rows)


def random_generators(rng: random.Random, d: int) -> list[Mat]:
    """One to three generators: diagonals, hermitians or symmetrised matrix units."""
    gens = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.randrange(3)
        if kind == 0:
            gens.append(Mat.diagonal([rng.randint(0, 2) for _ in range(d)]))
        elif kind == 1:
            gens.append(random_hermitian(rng, d))
        else:
            i, j = rng.randrange(d), rng.randrange(d)
            gens.append(Mat.unit(d, i, j) + Mat.unit(d, j, i))
    return gens


def random_span(rng: random.Random, d: int) -> AlgebraSpan:
    roll = rng.random()
    if roll < 0.05:
        return AlgebraSpan.trivial(d)
    if roll < 0.1:
        return AlgebraSpan.full(d)
    return generate_subalgebra(d, random_generators(rng, d))


def permutation(rng: random.Random, d: int) -> Mat:
    order = list(range(d))
    rng.shuffle(order)
    return Mat.from_entries([[1 if order[i] == j else 0 for j in range(d)] for i in range(d)])


def rational_rotation(rng: random.Random, d: int) -> Mat:
    """Orthogonal matrix with entries 3/5, 4/5 acting on two neighbouring coordinates."""
    entries: list[list[object]] = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    k = rng.randrange(d - 1)
    c, s = "3/5", "4/5"
    entries[k][k], entries[k][k + 1] = c, f"-{s}"
    entries[k + 1][k], entries[k + 1][k + 1] = s, c
    return Mat.from_entries(entries)


def random_normal_generator(rng: random.Random, d: int) -> GeneratorDecl:
    """Conjugate a diagonal with a declared spectrum by a permutation and a rational rotation."""
    values = [
        ExactScalar(Fraction(rng.randint(-3, 3), rng.choice([1, 2])), rng.choice([0, 0, 1]))
        for _ in range(d)
    ]
    spectrum = list(dict.fromkeys(values))
    if rng.random() < 0.3:
        # an eigenvalue that never occurs contributes no projection
        spectrum.append(ExactScalar(7))
    u = permutation(rng, d) @ rational_rotation(rng, d)
    a = u @ Mat.diagonal(values) @ u.adjoint()
    return GeneratorDecl("g", a, tuple(spectrum)).validate()


@pytest.mark.parametrize("d", DIMS)
class TestSpanLatticeProperties:
    """Lattice laws and commutation facts over freshly generated seeded spans."""

    def test_pairwise_laws(self, d):
        rng = random.Random(SEED + d)
        for _ in range(CASES_PER_DIM):
            s, t = random_span(rng, d), random_span(rng, d)
            meet = intersect(s, t)
            joined = join(s, t)
            assert meet == intersect(t, s)
            assert s.contains(meet) and t.contains(meet)
            assert joined.contains(s) and joined.contains(t)
            assert joined.dim >= max(s.dim, t.dim)
            assert intersect(s, joined) == s
            assert join(s, meet) == s
            assert commute(s, t) == commute(t, s)
            if is_commutative(s) and is_commutative(t) and commute(s, t):
                assert is_commutative(joined)
            if is_commutative(s):
                assert is_commutative(meet)

    def test_closure_is_idempotent(self, d):
        rng = random.Random(SEED + 10 * d)
        for _ in range(CASES_PER_DIM):
            s = random_span(rng, d)
            assert generate_subalgebra(d, list(s.basis)) == s

    def test_canonical_keys(self, d):
        rng = random.Random(SEED + 100 * d)
        for _ in range(CASES_PER_DIM):
            gens = random_generators(rng, d)
            s = generate_subalgebra(d, gens)
            again = generate_subalgebra(d, list(reversed(gens)))
            assert s.key() == again.key()
            t = random_span(rng, d)
            mutual = s.contains(t) and t.contains(s)
            assert mutual == (s.key() == t.key())
            assert mutual == (s == t)

    def test_commutant_laws(self, d):
        rng = random.Random(SEED + 1000 * d)
        for _ in range(CASES_PER_DIM // 10):
            s = random_span(rng, d)
            c = commutant(s)
            assert commute(s, c)
            assert commutant(c).contains(s)
            if is_commutative(s):
                assert c.contains(s)

    def test_idempotence(self, d):
        rng = random.Random(SEED - d)
        for _ in range(CASES_PER_DIM // 10):
            s = random_span(rng, d)
            assert intersect(s, s) == s
            assert join(s, s) == s
            assert join(s, AlgebraSpan.trivial(d)) == s
            assert intersect(s, AlgebraSpan.full(d)) == s


@pytest.mark.parametrize("d", DIMS)
class TestSpectralProjectionProperties:
    def test_resolution_of_identity(self, d):
        rng = random.Random(SEED + 7 * d)
        for _ in range(SPECTRAL_CASES_PER_DIM):
            g = random_normal_generator(rng, d)
            projections = spectral_projections(g)
            total = Mat.zero(d)
            weighted = Mat.zero(d)
            for lam, e in projections:
                total = total + e
                weighted = weighted + e.scale(lam)
            assert total == Mat.identity(d)
            assert weighted == g.matrix

    def test_orthogonal_idempotents(self, d):
        rng = random.Random(SEED + 11 * d)
        for _ in range(SPECTRAL_CASES_PER_DIM):
            projections = spectral_projections(random_normal_generator(rng, d))
            for a, (_, e) in enumerate(projections):
                assert e.is_hermitian()
                for b, (_, f) in enumerate(projections):
                    assert e @ f == (e if a == b else Mat.zero(d))
