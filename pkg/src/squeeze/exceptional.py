"""Exceptional classes ``(d; m)``: Diophantine conditions, Cremona reduction,
enumeration, and the classes built from odd Fibonacci numbers."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import kernels
from .weights import weight_expansion


@dataclass(frozen=True, order=True)
class ClassTuple:
    """A candidate class ``(d; m1, ..., mk)``.

    ``m`` is kept sorted nonincreasing with zeros removed, so equality and
    hashing ignore the order in which entries were given.  Negative ``d``
    or negative entries only occur as the end point of a reduction.
    """

    d: int
    m: tuple[int, ...] = field(default=())

    def __post_init__(self):
        m = tuple(sorted((int(x) for x in self.m if x), reverse=True))
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", m)

    @classmethod
    def parse(cls, text: str) -> "ClassTuple":
        """Read ``"d; m1,m2,..."``, with or without parentheses.

        ``a*n`` or ``axn`` may be used for n copies of a.
        """
        body = text.strip().strip("()")
        if ";" not in body:
            raise ValueError(f"malformed class {text!r}: expected 'd; m1,m2,...'")
        d_text, m_text = body.split(";", 1)
        m: list[int] = []
        for token in filter(None, (t.strip() for t in m_text.split(","))):
            rep = re.fullmatch(r"(-?\d+)\s*[*x×]\s*(\d+)", token)
            if rep:
                m.extend([int(rep.group(1))] * int(rep.group(2)))
            else:
                try:
                    m.append(int(token))
                except ValueError:
                    raise ValueError(f"malformed class entry {token!r}") from None
        return cls(int(d_text), tuple(m))

    @property
    def k(self) -> int:
        return len(self.m)

    def padded(self, n: int) -> tuple[int, ...]:
        return self.m + (0,) * max(0, n - len(self.m))

    def self_intersection(self) -> int:
        return self.d * self.d - sum(x * x for x in self.m)

    def first_chern(self) -> int:
        return 3 * self.d - sum(self.m)

    def listing(self) -> str:
        return f"{self.d}; " + ",".join(map(str, self.m))

    def __str__(self) -> str:
        return f"({self.d};" + ",".join(map(str, self.m)) + ")"


TERMINAL = ClassTuple(0, (-1,))
CLAIM_ONE_CLASS = ClassTuple(3, (2, 1, 1, 1, 1, 1, 1))


def diophantine_check(t: ClassTuple) -> bool:
    return t.d * t.d + 1 == sum(x * x for x in t.m) and 3 * t.d - 1 == sum(t.m)


def cremona_move(t: ClassTuple) -> ClassTuple:
    m1, m2, m3, *rest = t.padded(3)
    d = t.d
    return ClassTuple(
        2 * d - m1 - m2 - m3,
        (d - m2 - m3, d - m1 - m3, d - m1 - m2, *rest),
    )


@dataclass(frozen=True)
class ReductionTrace:
    start: ClassTuple
    steps: tuple[ClassTuple, ...]
    terminal: ClassTuple
    move_count: int

    def after(self, moves: int) -> ClassTuple:
        """The tuple reached after ``moves`` Cremona moves."""
        if moves == 0:
            return self.start
        return self.steps[moves - 1]

    def passes_through(self, t: ClassTuple) -> int | None:
        """Number of moves after which ``t`` is reached, or None."""
        if t == self.start:
            return 0
        for i, s in enumerate(self.steps, 1):
            if s == t:
                return i
        return None


def _reducible(t: ClassTuple) -> bool:
    return t.d >= 0 and sum(t.padded(3)[:3]) > t.d


def reduce(t: ClassTuple) -> ReductionTrace:
    """Apply Cremona moves while ``m1 + m2 + m3 > d``.

    Each such move lowers ``d``.  The loop also stops once ``d`` has gone
    negative, which can only happen for tuples outside the Diophantine set.
    """
    steps: list[ClassTuple] = []
    current = t
    while _reducible(current):
        current = cremona_move(current)
        steps.append(current)
    return ReductionTrace(t, tuple(steps), current, len(steps))


def is_exceptional(t: ClassTuple) -> bool:
    return diophantine_check(t) and reduce(t).terminal == TERMINAL


def intersection(t: ClassTuple, u: ClassTuple) -> int:
    n = max(t.k, u.k)
    return t.d * u.d - sum(x * y for x, y in zip(t.padded(n), u.padded(n)))


@lru_cache(maxsize=None)
def _diophantine_at(d: int) -> tuple[ClassTuple, ...]:
    # m1 = d would force m = (d, 1), which only satisfies 3d-1 = d+1 at d = 1
    cap = 1 if d == 1 else d - 1
    return tuple(sorted(ClassTuple(d, m) for m in kernels.diophantine_parts(d, cap)))


@lru_cache(maxsize=None)
def _exceptional_at(d: int) -> tuple[ClassTuple, ...]:
    return tuple(t for t in _diophantine_at(d) if reduce(t).terminal == TERMINAL)


def enumerate_diophantine_only(d_max: int) -> list[ClassTuple]:
    """All positive Diophantine solutions with ``1 <= d <= d_max``."""
    if d_max < 1:
        raise ValueError("d_max must be a positive integer")
    return [t for d in range(1, d_max + 1) for t in _diophantine_at(d)]


def enumerate_classes(d_max: int) -> list[ClassTuple]:
    """Exceptional classes with ``1 <= d <= d_max``, sorted by ``(d, m)``."""
    if d_max < 1:
        raise ValueError("d_max must be a positive integer")
    return [t for d in range(1, d_max + 1) for t in _exceptional_at(d)]


def fake_classes(d_max: int) -> list[ClassTuple]:
    """Diophantine solutions that do not reduce to the terminal class."""
    return [t for t in enumerate_diophantine_only(d_max) if reduce(t).terminal != TERMINAL]


def first_fake_below_claim_class(d_limit: int = 60) -> ClassTuple | None:
    """First fake tuple pairing negatively with (3; 2, 1x6), scanning d upward."""
    for d in range(1, d_limit + 1):
        for t in _diophantine_at(d):
            if intersection(t, CLAIM_ONE_CLASS) < 0 and reduce(t).terminal != TERMINAL:
                return t
    return None


def fibonacci_g(n: int) -> int:
    """Odd-indexed Fibonacci numbers 1, 1, 2, 5, 13, 34, ... (index from 0)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = 1, 1
    for _ in range(n):
        prev, cur = cur, 3 * cur - prev
    return prev


def fib_ab(n: int) -> tuple[Fraction, Fraction]:
    """The staircase corners ``((g[n+1]/g[n])**2, g[n+2]/g[n])``."""
    g0, g1, g2 = fibonacci_g(n), fibonacci_g(n + 1), fibonacci_g(n + 2)
    return Fraction(g1, g0) ** 2, Fraction(g2, g0)


def _scaled(scale: int, weights: Iterable[Fraction]) -> list[int]:
    out = []
    for w in weights:
        v = scale * w
        if v.denominator != 1:
            raise ArithmeticError(f"scaled weight {v} is not an integer")
        out.append(int(v))
    return out


def fib_class_b(n: int) -> ClassTuple:
    """``(g[n+1]; g[n] * w(b_n))``."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    _, b = fib_ab(n)
    return ClassTuple(fibonacci_g(n + 1), tuple(_scaled(fibonacci_g(n), weight_expansion(b))))


def fib_class_a(n: int) -> ClassTuple:
    """``(g[n] g[n+1]; g[n]**2 * w(a_n), 1)``."""
    if n < 1:
        raise ValueError("fib_class_a needs n >= 1")
    a, _ = fib_ab(n)
    g = fibonacci_g(n)
    m = _scaled(g * g, weight_expansion(a)) + [1]
    return ClassTuple(g * fibonacci_g(n + 1), tuple(m))
