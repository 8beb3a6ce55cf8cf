"""Sparse reduced row echelon form over Q.

Vectors are dicts {coordinate: rational} with zero entries omitted. Every stored
row is normalized (1 at its pivot) and has 0 at every other row's pivot, so
reduction is a single pass over the pivots present in the input.
"""

from fractions import Fraction
from typing import Iterable, Optional

from app.algebra.scalars import Rational, _norm

Vector = dict[int, Rational]


def axpy(y: Vector, a: Rational, x: Vector) -> None:
    """In place y <- y + a*x, dropping cancelled entries."""
    for k, v in x.items():
        nv = y.get(k, 0) + a * v
        if nv == 0:
            y.pop(k, None)
        else:
            y[k] = nv


class Echelon:
    """Incrementally built RREF basis of a subspace of Q^n."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Optional[dict[int, Vector]] = None):
        self._rows: dict[int, Vector] = rows if rows is not None else {}

    def copy(self) -> "Echelon":
        return Echelon({p: dict(r) for p, r in self._rows.items()})

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def rows(self) -> list[tuple[int, Vector]]:
        return [(p, self._rows[p]) for p in sorted(self._rows)]

    def reduce(self, vec: Vector) -> Vector:
        """Residual of `vec` modulo the span; zero dict iff vec is in the span."""
        out = dict(vec)
        for p in [k for k in vec if k in self._rows]:
            c = out.get(p)
            if c:
                axpy(out, -c, self._rows[p])
        return out

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: Vector) -> bool:
        """Add `vec` to the span. Returns False if it was already there."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        lead = r[p]
        if lead != 1:
            inv = Fraction(1) / lead
            r = {k: _norm(v * inv) for k, v in r.items()}
        for row in self._rows.values():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
        self._rows[p] = r
        return True

    def extend(self, vecs: Iterable[Vector]) -> int:
        return sum(1 for v in vecs if self.insert(v))

    def key(self) -> tuple:
        return tuple(
            (p, tuple(sorted(row.items()))) for p, row in sorted(self._rows.items())
        )


def left_kernel(vectors: list[Vector], offset: int) -> list[Vector]:
    """
    Basis of {c : sum_k c_k * vectors[k] = 0}, as coefficient dicts {k: c_k}.

    Rows [v_k | e_k] are echelonized with the coefficient block placed at
    `offset` (which must exceed every coordinate used by the vectors); rows
    whose pivot falls inside that block have a zero left part.
    """
    aug = Echelon()
    for k, v in enumerate(vectors):
        row = dict(v)
        row[offset + k] = 1
        aug.insert(row)
    kernel: list[Vector] = []
    for p, row in aug.rows():
        if p >= offset:
            kernel.append({k - offset: c for k, c in row.items()})
    return kernel


def combine(coeffs: Vector, vectors: list[Vector]) -> Vector:
    out: Vector = {}
    for k, c in coeffs.items():
        axpy(out, c, vectors[k])
    return out
