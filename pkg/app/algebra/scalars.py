"""Gaussian-rational scalars: exact complex numbers a + bi with a, b in Q."""

import math
from fractions import Fraction
from typing import Any, Union

Rational = Union[int, Fraction]


def _norm(q: Rational) -> Rational:
    """Collapse integral Fractions to int (ints are much faster in the echelon kernel)."""
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


def parse_rational(value: Any) -> Rational:
    """Parse int, Fraction, "p/q" or decimal string into an exact rational."""
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return _norm(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty rational string")
        return _norm(Fraction(text))
    if isinstance(value, float):
        # a float is taken only when its binary value is its shortest decimal
        if not math.isfinite(value):
            raise ValueError(f"Not a rational: {value!r}")
        exact = Fraction(value)
        if exact != Fraction(repr(value)):
            raise ValueError(
                f"Float {value!r} is not exactly representable; write it as a string like \"p/q\""
            )
        return _norm(exact)
    raise ValueError(f"Not a rational: {value!r}")


def format_rational(q: Rational) -> str:
    return str(q)


class ExactScalar:
    """Immutable Gaussian rational."""

    __slots__ = ("re", "im")

    re: Rational
    im: Rational

    def __init__(self, re: Rational = 0, im: Rational = 0):
        object.__setattr__(self, "re", _norm(re))
        object.__setattr__(self, "im", _norm(im))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def parse(cls, value: Any) -> "ExactScalar":
        """Accept a rational (int, "p/q", decimal string) or a [re, im] pair."""
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise ValueError(f"Complex entry must be [re, im], got {value!r}")
            return cls(parse_rational(value[0]), parse_rational(value[1]))
        return cls(parse_rational(value))

    def to_json(self) -> Union[str, list[str]]:
        if self.im == 0:
            return format_rational(self.re)
        return [format_rational(self.re), format_rational(self.im)]

    # ---- arithmetic ----

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        return ExactScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return ExactScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.re, -self.im)

    def __mul__(self, other: "ExactScalar") -> "ExactScalar":
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return ExactScalar(a * c, 0)
        return ExactScalar(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "ExactScalar") -> "ExactScalar":
        c, d = other.re, other.im
        denom = c * c + d * d
        if denom == 0:
            raise ZeroDivisionError("division by zero scalar")
        num = self * other.conjugate()
        return ExactScalar(Fraction(num.re) / denom, Fraction(num.im) / denom)

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    # ---- comparison ----

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def sort_key(self) -> tuple[Rational, Rational]:
        return (self.re, self.im)

    def __repr__(self) -> str:
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I_UNIT = ExactScalar(0, 1)
