"""Unital *-subalgebras of M_d stored in canonical echelon form.

A complex subspace of M_d is kept as the real span of {v, i*v} inside
R^{2d^2}. Its reduced echelon rows with even pivots form the reduced echelon
basis over Q(i), which is what `AlgebraSpan.basis` exposes.
"""

import logging
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from app.algebra.echelon import Echelon, Vector, combine, left_kernel
from app.algebra.matrices import Mat, identity_like
from app.algebra.scalars import I_UNIT
from app.core.exceptions import DimensionMismatchException

logger = logging.getLogger(__name__)


def _insert_complex(ech: Echelon, m: Mat) -> bool:
    """Insert m and i*m. Returns True if m was not yet in the complex span."""
    if not ech.insert(m.real_vector()):
        return False
    ech.insert(m.times_i_vector())
    return True


class AlgebraSpan:
    """Immutable canonical span; equality and hashing go through the echelon key."""

    __slots__ = ("ambient_dim", "basis", "_ech", "_key", "_hash")

    def __init__(self, ambient_dim: int, ech: Echelon):
        self.ambient_dim = ambient_dim
        self._ech = ech
        self.basis: tuple[Mat, ...] = tuple(
            Mat.from_real_vector(ambient_dim, row) for p, row in ech.rows() if p % 2 == 0
        )
        self._key = (ambient_dim, ech.key())
        self._hash = hash(self._key)

    @classmethod
    def trivial(cls, d: int) -> "AlgebraSpan":
        ech = Echelon()
        _insert_complex(ech, Mat.identity(d))
        return cls(d, ech)

    @classmethod
    def full(cls, d: int) -> "AlgebraSpan":
        ech = Echelon()
        for i in range(d):
            for j in range(d):
                _insert_complex(ech, Mat.unit(d, i, j))
        return cls(d, ech)

    @property
    def dim(self) -> int:
        """Complex linear dimension."""
        return len(self.basis)

    def real_rows(self) -> list[Vector]:
        return [row for _, row in self._ech.rows()]

    def contains_matrix(self, m: Mat) -> bool:
        if m.dim != self.ambient_dim:
            return False
        return self._ech.contains(m.real_vector())

    def __contains__(self, m: object) -> bool:
        return isinstance(m, Mat) and self.contains_matrix(m)

    def contains(self, other: "AlgebraSpan") -> bool:
        """Subspace inclusion other <= self."""
        _check_dims(self, other)
        if other.dim > self.dim:
            return False
        if other is self:
            return True
        return all(self._ech.contains(b.real_vector()) for b in other.basis)

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraSpan):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"AlgebraSpan(d={self.ambient_dim}, dim={self.dim})"


def _check_dims(s: AlgebraSpan, t: AlgebraSpan) -> None:
    if s.ambient_dim != t.ambient_dim:
        raise DimensionMismatchException(
            f"Ambient dimension mismatch: {s.ambient_dim} vs {t.ambient_dim}",
            details={"left": s.ambient_dim, "right": t.ambient_dim},
        )


def _close(ech: Echelon, basis: list[Mat], queue: list[Mat]) -> None:
    """Worklist closure under adjoint and products with every basis element."""

    def add(m: Mat) -> None:
        if _insert_complex(ech, m):
            basis.append(m)
            queue.append(m)

    while queue:
        m = queue.pop()
        add(m.adjoint())
        for b in list(basis):
            add(m @ b)
            add(b @ m)


def generate_subalgebra(ambient_dim: int, gens: Sequence[Mat]) -> AlgebraSpan:
    """Smallest unital *-subalgebra of M_d containing `gens`."""
    ident = identity_like(gens, ambient_dim)
    ech = Echelon()
    basis: list[Mat] = []
    queue: list[Mat] = []
    for m in [ident, *gens]:
        if _insert_complex(ech, m):
            basis.append(m)
            queue.append(m)
    _close(ech, basis, queue)
    span = AlgebraSpan(ambient_dim, ech)
    logger.debug(f"Closure of {len(gens)} generators in M_{ambient_dim}: dim {span.dim}")
    return span


def commutation_witness(s: AlgebraSpan, t: AlgebraSpan) -> Optional[tuple[Mat, Mat]]:
    """First pair of basis elements (a in s, b in t) with ab != ba, or None."""
    _check_dims(s, t)
    for a in s.basis:
        for b in t.basis:
            if not a.commutes_with(b):
                return a, b
    return None


@lru_cache(maxsize=65536)
def commute(s: AlgebraSpan, t: AlgebraSpan) -> bool:
    """True iff every element of s commutes with every element of t."""
    return commutation_witness(s, t) is None


@lru_cache(maxsize=4096)
def is_commutative(s: AlgebraSpan) -> bool:
    basis = s.basis
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            if not a.commutes_with(b):
                return False
    return True


@lru_cache(maxsize=65536)
def intersect(s: AlgebraSpan, t: AlgebraSpan) -> AlgebraSpan:
    """Linear intersection; again a unital *-subalgebra."""
    _check_dims(s, t)
    if t.contains(s):
        return s
    if s.contains(t):
        return t
    small, large = (s, t) if s.dim <= t.dim else (t, s)
    rows = small.real_rows()
    residuals = [large._ech.reduce(r) for r in rows]
    offset = 2 * s.ambient_dim * s.ambient_dim
    ech = Echelon()
    for coeffs in left_kernel(residuals, offset):
        ech.insert(combine(coeffs, rows))
    return AlgebraSpan(s.ambient_dim, ech)


@lru_cache(maxsize=65536)
def join(s: AlgebraSpan, t: AlgebraSpan) -> AlgebraSpan:
    """Smallest unital *-subalgebra containing s and t."""
    _check_dims(s, t)
    if s.contains(t):
        return s
    if t.contains(s):
        return t
    if commute(s, t):
        # span{ab} is already a *-algebra when s and t commute
        ech = Echelon()
        for a in s.basis:
            for b in t.basis:
                _insert_complex(ech, a @ b)
        return AlgebraSpan(s.ambient_dim, ech)
    return generate_subalgebra(s.ambient_dim, [*s.basis, *t.basis])


def join_all(spans: Iterable[AlgebraSpan], ambient_dim: int) -> AlgebraSpan:
    result = AlgebraSpan.trivial(ambient_dim)
    for s in spans:
        result = join(result, s)
    return result


def commutant(s: AlgebraSpan) -> AlgebraSpan:
    """All X with [X, b] = 0 for every basis element b, as the kernel of X -> ([X, b])_b."""
    d = s.ambient_dim
    n = 2 * d * d
    unknowns: list[Mat] = []
    images: list[Vector] = []
    for i in range(d):
        for j in range(d):
            e = Mat.unit(d, i, j)
            for x in (e, e.scale(I_UNIT)):
                image: Vector = {}
                for k, b in enumerate(s.basis):
                    for coord, v in x.commutator(b).real_vector().items():
                        image[k * n + coord] = v
                unknowns.append(x)
                images.append(image)
    offset = n * max(1, s.dim)
    unknown_vectors = [x.real_vector() for x in unknowns]
    ech = Echelon()
    for coeffs in left_kernel(images, offset):
        ech.insert(combine(coeffs, unknown_vectors))
    return AlgebraSpan(d, ech)


def span_of(ambient_dim: int, mats: Sequence[Mat]) -> Echelon:
    """Echelon of the complex linear span of `mats` (no closure)."""
    ech = Echelon()
    for m in mats:
        _insert_complex(ech, m)
    return ech


def linear_dimension(ambient_dim: int, mats: Sequence[Mat]) -> int:
    return span_of(ambient_dim, mats).rank // 2
