"""Exact number types.

Rationals are :class:`fractions.Fraction`; everything else here exists to
compare rationals against the few irrational quantities that show up
(square roots of rationals, the golden ratio and its fourth power) and to
evaluate linear forms at a rational that has been nudged infinitesimally to
one side.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from numbers import Integral
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*\Z")


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, value) -> "Ordering":
        return cls((value > 0) - (value < 0))


def make_rational(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``.

    Decimal and float notation is rejected on purpose: every number that
    enters the library has to be exact.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"division by zero in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Integral) and not isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of ``x`` if it is a perfect square, else None."""
    x = as_rational(x)
    if x < 0:
        raise ValueError("square root of a negative rational")
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def cmp_sqrt(x: RationalLike, y: RationalLike) -> Ordering:
    """Compare ``x`` with ``sqrt(y)`` exactly, for ``x, y >= 0``."""
    x, y = as_rational(x), as_rational(y)
    if x < 0 or y < 0:
        raise ValueError("cmp_sqrt needs nonnegative arguments")
    return Ordering.of(x * x - y)


@total_ordering
@dataclass(frozen=True, init=False)
class Surd5:
    """The real number ``(p + q*sqrt(5)) / r`` with ``r > 0``."""

    p: int
    q: int
    r: int

    def __init__(self, p: int, q: int = 0, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("division by zero")
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)
        object.__setattr__(self, "r", r // g)

    @classmethod
    def coerce(cls, other) -> "Surd5":
        if isinstance(other, Surd5):
            return other
        x = as_rational(other)
        return cls(x.numerator, 0, x.denominator)

    def sign(self) -> int:
        p, q = self.p, self.q
        if p >= 0 and q >= 0:
            return int(p > 0 or q > 0)
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: the larger magnitude of p and q*sqrt(5) wins
        diff = p * p - 5 * q * q
        return (diff > 0) - (diff < 0) if p > 0 else (diff < 0) - (diff > 0)

    def __neg__(self) -> "Surd5":
        return Surd5(-self.p, -self.q, self.r)

    def __add__(self, other) -> "Surd5":
        o = Surd5.coerce(other)
        return Surd5(self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r)

    __radd__ = __add__

    def __sub__(self, other) -> "Surd5":
        return self + (-Surd5.coerce(other))

    def __rsub__(self, other) -> "Surd5":
        return Surd5.coerce(other) - self

    def __mul__(self, other) -> "Surd5":
        o = Surd5.coerce(other)
        return Surd5(
            self.p * o.p + 5 * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            o = Surd5.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.p, self.q, self.r) == (o.p, o.q, o.r)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.r))

    def __lt__(self, other) -> bool:
        try:
            return (self - other).sign() < 0
        except TypeError:
            return NotImplemented

    def __float__(self) -> float:
        return (self.p + self.q * 5 ** 0.5) / self.r

    def __repr__(self) -> str:
        return f"Surd5({self.p}, {self.q}, {self.r})"


TAU = Surd5(1, 1, 2)
TAU4 = Surd5(7, 3, 2)


def cmp_tau4(a: RationalLike) -> Ordering:
    """Compare a rational with tau**4 = (7 + 3*sqrt(5))/2; never EQUAL."""
    return Ordering.of((Surd5.coerce(a) - TAU4).sign())


class Side(IntEnum):
    BELOW = -1
    EXACT = 0
    ABOVE = 1


@dataclass(frozen=True, order=True)
class PerturbedRational:
    """``base`` shifted by an infinitesimal in the direction of ``side``.

    Ordered lexicographically on ``(base, side)``.  The only arithmetic
    offered is the sign of an affine form evaluated at this point, which is
    what half-plane membership needs.
    """

    base: Fraction
    side: Side = Side.EXACT

    def __post_init__(self):
        object.__setattr__(self, "base", as_rational(self.base))
        object.__setattr__(self, "side", Side(self.side))

    @classmethod
    def below(cls, x: RationalLike) -> "PerturbedRational":
        return cls(as_rational(x), Side.BELOW)

    @classmethod
    def above(cls, x: RationalLike) -> "PerturbedRational":
        return cls(as_rational(x), Side.ABOVE)

    @classmethod
    def exact(cls, x: RationalLike) -> "PerturbedRational":
        return cls(as_rational(x), Side.EXACT)

    def affine_sign(self, const: RationalLike, coeff: RationalLike) -> int:
        """Sign of ``const + coeff * z`` at ``z = self``."""
        const, coeff = as_rational(const), as_rational(coeff)
        value = const + coeff * self.base
        if value:
            return 1 if value > 0 else -1
        # on the boundary: the infinitesimal shift decides
        return ((coeff > 0) - (coeff < 0)) * int(self.side)

    def __str__(self) -> str:
        suffix = {Side.BELOW: "-", Side.EXACT: "", Side.ABOVE: "+"}[self.side]
        return format_rational(self.base) + suffix
