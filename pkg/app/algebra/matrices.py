"""Sparse square matrices over Gaussian rationals."""

from typing import Any, Iterable, Iterator, Optional, Sequence

from app.algebra.scalars import ONE, ZERO, ExactScalar, Rational
from app.core.exceptions import DimensionMismatchException

Rows = dict[int, dict[int, ExactScalar]]


class Mat:
    """
    Immutable d x d matrix stored as nonzero rows {i: {j: entry}}.

    `@` is the matrix product, `scale` multiplies by a scalar.
    """

    __slots__ = ("dim", "_rows", "_key")

    def __init__(self, dim: int, rows: Optional[Rows] = None):
        if dim <= 0:
            raise DimensionMismatchException(f"Matrix dimension must be positive, got {dim}")
        self.dim = dim
        clean: Rows = {}
        for i, row in (rows or {}).items():
            kept = {j: v for j, v in row.items() if not v.is_zero()}
            if kept:
                clean[i] = kept
        self._rows = clean
        self._key: Optional[tuple] = None

    # ---- constructors ----

    @classmethod
    def identity(cls, dim: int) -> "Mat":
        return cls(dim, {i: {i: ONE} for i in range(dim)})

    @classmethod
    def zero(cls, dim: int) -> "Mat":
        return cls(dim, {})

    @classmethod
    def unit(cls, dim: int, i: int, j: int, value: ExactScalar = ONE) -> "Mat":
        return cls(dim, {i: {j: value}})

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "Mat":
        return cls(len(values), {i: {i: ExactScalar.parse(v)} for i, v in enumerate(values)})

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[Any]]) -> "Mat":
        """Build from a dense row list; entries are anything ExactScalar.parse accepts."""
        dim = len(entries)
        if dim == 0:
            raise DimensionMismatchException("Matrix must have at least one row")
        rows: Rows = {}
        for i, row in enumerate(entries):
            if len(row) != dim:
                raise DimensionMismatchException(
                    f"Matrix is not square: row {i} has {len(row)} entries, expected {dim}",
                    details={"row": i, "length": len(row), "dim": dim},
                )
            rows[i] = {j: ExactScalar.parse(v) for j, v in enumerate(row)}
        return cls(dim, rows)

    @classmethod
    def outer(cls, vector: Sequence[Any]) -> "Mat":
        """Rank-one projection v v* / (v* v) onto a nonzero vector."""
        v = [ExactScalar.parse(x) for x in vector]
        norm = ZERO
        for x in v:
            norm = norm + x * x.conjugate()
        if norm.is_zero():
            raise ValueError("Cannot project onto the zero vector")
        rows: Rows = {}
        for i, a in enumerate(v):
            if a.is_zero():
                continue
            rows[i] = {j: a * b.conjugate() / norm for j, b in enumerate(v) if not b.is_zero()}
        return cls(len(v), rows)

    # ---- access ----

    def get(self, i: int, j: int) -> ExactScalar:
        return self._rows.get(i, {}).get(j, ZERO)

    def items(self) -> Iterator[tuple[int, int, ExactScalar]]:
        for i, row in self._rows.items():
            for j, v in row.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def to_dense(self) -> list[list[ExactScalar]]:
        return [[self.get(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def to_json(self) -> list[list[Any]]:
        return [[v.to_json() for v in row] for row in self.to_dense()]

    # ---- arithmetic ----

    def _check(self, other: "Mat") -> None:
        if other.dim != self.dim:
            raise DimensionMismatchException(
                f"Dimension mismatch: {self.dim} vs {other.dim}",
                details={"left": self.dim, "right": other.dim},
            )

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        rows: Rows = {i: dict(r) for i, r in self._rows.items()}
        for i, j, v in other.items():
            row = rows.setdefault(i, {})
            row[j] = row[j] + v if j in row else v
        return Mat(self.dim, rows)

    def __neg__(self) -> "Mat":
        return Mat(self.dim, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        rows: Rows = {}
        for i, row in self._rows.items():
            acc: dict[int, ExactScalar] = {}
            for k, a in row.items():
                other_row = other._rows.get(k)
                if not other_row:
                    continue
                for j, b in other_row.items():
                    p = a * b
                    acc[j] = acc[j] + p if j in acc else p
            if acc:
                rows[i] = acc
        return Mat(self.dim, rows)

    def scale(self, s: ExactScalar) -> "Mat":
        if s.is_zero():
            return Mat.zero(self.dim)
        return Mat(self.dim, {i: {j: s * v for j, v in r.items()} for i, r in self._rows.items()})

    def shift(self, s: ExactScalar) -> "Mat":
        """self - s*I"""
        return self - Mat.identity(self.dim).scale(s)

    def adjoint(self) -> "Mat":
        rows: Rows = {}
        for i, j, v in self.items():
            rows.setdefault(j, {})[i] = v.conjugate()
        return Mat(self.dim, rows)

    def commutator(self, other: "Mat") -> "Mat":
        return self @ other - other @ self

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product self (x) other."""
        d2 = other.dim
        rows: Rows = {}
        for i, j, a in self.items():
            for k, l, b in other.items():
                rows.setdefault(i * d2 + k, {})[j * d2 + l] = a * b
        return Mat(self.dim * d2, rows)

    # ---- predicates ----

    def is_zero(self) -> bool:
        return not self._rows

    def commutes_with(self, other: "Mat") -> bool:
        return self @ other == other @ self

    def is_normal(self) -> bool:
        return self.commutes_with(self.adjoint())

    def is_idempotent(self) -> bool:
        return self @ self == self

    def is_hermitian(self) -> bool:
        return self == self.adjoint()

    def is_scalar_multiple(self, other: "Mat") -> Optional[ExactScalar]:
        """Return s with self == s*other, if one exists and other is nonzero."""
        for i, j, v in other.items():
            s = self.get(i, j) / v
            return s if self == other.scale(s) else None
        return None

    # ---- real coordinates ----

    def real_vector(self) -> dict[int, Rational]:
        """Coordinates in R^{2d^2}: row-major entries, real part before imaginary part."""
        d = self.dim
        vec: dict[int, Rational] = {}
        for i, j, v in self.items():
            base = 2 * (i * d + j)
            if v.re != 0:
                vec[base] = v.re
            if v.im != 0:
                vec[base + 1] = v.im
        return vec

    def times_i_vector(self) -> dict[int, Rational]:
        """Real coordinates of i*self."""
        d = self.dim
        vec: dict[int, Rational] = {}
        for i, j, v in self.items():
            base = 2 * (i * d + j)
            if v.im != 0:
                vec[base] = -v.im
            if v.re != 0:
                vec[base + 1] = v.re
        return vec

    @classmethod
    def from_real_vector(cls, dim: int, vec: dict[int, Rational]) -> "Mat":
        parts: dict[tuple[int, int], list[Rational]] = {}
        for coord, value in vec.items():
            flat, part = divmod(coord, 2)
            i, j = divmod(flat, dim)
            parts.setdefault((i, j), [0, 0])[part] = value
        rows: Rows = {}
        for (i, j), (re, im) in parts.items():
            rows.setdefault(i, {})[j] = ExactScalar(re, im)
        return cls(dim, rows)

    # ---- identity ----

    def key(self) -> tuple:
        if self._key is None:
            self._key = (
                self.dim,
                tuple(sorted((i, j, v.re, v.im) for i, j, v in self.items())),
            )
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Mat(dim={self.dim}, nnz={self.nnz()})"


def identity_like(mats: Iterable[Mat], dim: int) -> Mat:
    """Identity of the common dimension of `mats` (or `dim` when empty)."""
    for m in mats:
        if m.dim != dim:
            raise DimensionMismatchException(
                f"Generator has dimension {m.dim}, expected {dim}",
                details={"expected": dim, "actual": m.dim},
            )
    return Mat.identity(dim)


def kron_all(factors: Sequence[Mat]) -> Mat:
    result = factors[0]
    for f in factors[1:]:
        result = result.kron(f)
    return result


def tensor_embed(m: Mat, dims: Sequence[int], site: int) -> Mat:
    """Embed a factor matrix at position `site` of the tensor product of `dims`."""
    if dims[site] != m.dim:
        raise DimensionMismatchException(
            f"Site {site} has dimension {dims[site]}, matrix has {m.dim}",
            details={"site": site, "site_dim": dims[site], "matrix_dim": m.dim},
        )
    factors = [m if k == site else Mat.identity(d) for k, d in enumerate(dims)]
    return kron_all(factors)
