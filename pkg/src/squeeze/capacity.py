"""The ellipsoid-into-ball capacity function c(a)."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .exceptional import (
    CLAIM_ONE_CLASS,
    ClassTuple,
    enumerate_classes,
    fib_ab,
    fib_class_b,
    fibonacci_g,
)
from .numerics import (
    Ordering,
    RationalLike,
    as_rational,
    cmp_tau4,
    format_rational,
    rational_sqrt,
)
from .weights import weight_expansion

VOLUME = "volume"
FLAT_THRESHOLD = Fraction(289, 36)
CLAIM_ONE_END = Fraction(7)

Witness = Union[ClassTuple, str, None]


class ValueKind(str, Enum):
    RATIONAL = "rational"
    SQRT = "sqrt_of_rational"


class Status(str, Enum):
    EXACT_STAIRCASE = "exact_staircase"
    EXACT_FLAT = "exact_flat"
    CLAIMED = "claimed"
    LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class CapacityResult:
    """An exact capacity value.

    ``value`` is the number itself for ``RATIONAL`` and the radicand for
    ``SQRT``.  A square root of a perfect square is always stored as
    ``RATIONAL``.
    """

    value_kind: ValueKind
    value: Fraction
    status: Status
    witness: Witness = None

    @property
    def squared(self) -> Fraction:
        return self.value if self.value_kind is ValueKind.SQRT else self.value * self.value

    def compare(self, other: "CapacityResult | RationalLike") -> Ordering:
        """Exact comparison; all capacities are nonnegative so squares decide."""
        other_sq = other.squared if isinstance(other, CapacityResult) else as_rational(other) ** 2
        return Ordering.of(self.squared - other_sq)

    def same_value(self, other: "CapacityResult | RationalLike") -> bool:
        return self.compare(other) == Ordering.EQUAL

    def exact_str(self) -> str:
        if self.value_kind is ValueKind.SQRT:
            return f"sqrt({format_rational(self.value)})"
        return format_rational(self.value)

    def __float__(self) -> float:
        if self.value_kind is ValueKind.SQRT:
            return float(self.value) ** 0.5
        return float(self.value)

    def __str__(self) -> str:
        return self.exact_str()


def sqrt_result(x: Fraction, status: Status, witness: Witness = VOLUME) -> CapacityResult:
    root = rational_sqrt(x)
    if root is not None:
        return CapacityResult(ValueKind.RATIONAL, root, status, witness)
    return CapacityResult(ValueKind.SQRT, x, status, witness)


def obstruction_value(a: RationalLike, t: ClassTuple) -> Fraction:
    """``sum(m_i * w_i(a)) / d``, the shorter vector padded with zeros."""
    a = as_rational(a)
    if t.d == 0:
        raise ValueError("obstruction undefined for d = 0")
    return _pairing(t, weight_expansion(a).weights) / t.d


def _pairing(t: ClassTuple, weights: Sequence[Fraction]) -> Fraction:
    return sum((m * w for m, w in zip(t.m, weights)), Fraction(0))


def c_lower(a: RationalLike, d_max: int) -> CapacityResult:
    """Lower bound for c(a) from the volume and all classes with d <= d_max.

    Ties keep the volume bound, then the first class in (d, m) order.
    """
    a = as_rational(a)
    if a < 1:
        raise ValueError(f"c(a) needs a >= 1, got {a}")
    best_sq = a
    best: ClassTuple | None = None
    best_value = Fraction(0)
    weights = weight_expansion(a).weights
    for t in enumerate_classes(d_max):
        v = _pairing(t, weights) / t.d
        if v * v > best_sq:
            best_sq, best, best_value = v * v, t, v
    if best is None:
        return sqrt_result(a, Status.LOWER_BOUND)
    return CapacityResult(ValueKind.RATIONAL, best_value, Status.LOWER_BOUND, best)


def staircase_step(a: RationalLike) -> int:
    """The n with ``a_n <= a < a_{n+1}``, for ``1 <= a < tau**4``."""
    a = as_rational(a)
    if a < 1:
        raise ValueError(f"c(a) needs a >= 1, got {a}")
    if cmp_tau4(a) is not Ordering.LESS:
        raise ValueError(f"{a} is not below tau^4; the staircase ends there")
    n = 0
    while a >= fib_ab(n + 1)[0]:
        n += 1
    return n


def c_staircase(a: RationalLike) -> CapacityResult:
    """Closed-form c(a) below tau**4.

    Linear ``a * g[n]/g[n+1]`` on ``[a_n, b_n]`` and constant
    ``g[n+2]/g[n+1]`` on ``[b_n, a_{n+1}]``; the class built from ``b_n``
    attains the value on the whole step.
    """
    a = as_rational(a)
    n = staircase_step(a)
    _, b = fib_ab(n)
    g0, g1, g2 = fibonacci_g(n), fibonacci_g(n + 1), fibonacci_g(n + 2)
    value = a * g0 / g1 if a <= b else Fraction(g2, g1)
    return CapacityResult(ValueKind.RATIONAL, value, Status.EXACT_STAIRCASE, fib_class_b(n))


def c_full(a: RationalLike, d_max: int) -> CapacityResult:
    """Best available value of c(a), labelled with how much of it is proven.

    Below tau**4 the staircase is exact; from 289/36 on, c(a) = sqrt(a).  On
    (tau**4, 7] the value (1+a)/3 of (3; 2, 1x6) is reported as claimed (or
    an enumerated class if one ever beats it).  The window (7, 289/36) only
    gets the enumerated lower bound.
    """
    a = as_rational(a)
    if a < 1:
        raise ValueError(f"c(a) needs a >= 1, got {a}")
    if cmp_tau4(a) is Ordering.LESS:
        return c_staircase(a)
    if a >= FLAT_THRESHOLD:
        return sqrt_result(a, Status.EXACT_FLAT)
    lower = c_lower(a, d_max)
    if a <= CLAIM_ONE_END:
        claimed = obstruction_value(a, CLAIM_ONE_CLASS)
        if lower.compare(claimed) is Ordering.GREATER:
            return CapacityResult(lower.value_kind, lower.value, Status.CLAIMED, lower.witness)
        return CapacityResult(ValueKind.RATIONAL, claimed, Status.CLAIMED, CLAIM_ONE_CLASS)
    return lower


class Outcome(str, Enum):
    INFEASIBLE = "infeasible"
    FEASIBLE_UP_TO_BOUND = "feasible_up_to_bound"


@dataclass(frozen=True)
class PackingVerdict:
    outcome: Outcome
    witness: Witness
    d_max_used: int

    @property
    def feasible(self) -> bool:
        return self.outcome is Outcome.FEASIBLE_UP_TO_BOUND


def packing_feasible(weights: Sequence[RationalLike], mu: RationalLike, d_max: int) -> PackingVerdict:
    """Test whether balls with the given weights pack into a ball of size mu.

    Only classes with ``d <= d_max`` are checked, so a positive answer is
    feasibility up to that bound.  Equality in the volume constraint counts
    as feasible (a full filling).
    """
    ws = sorted((as_rational(w) for w in weights), reverse=True)
    mu = as_rational(mu)
    if not ws:
        raise ValueError("need at least one weight")
    if mu <= 0 or ws[-1] <= 0:
        raise ValueError("weights and mu must be positive")
    if sum(w * w for w in ws) > mu * mu:
        return PackingVerdict(Outcome.INFEASIBLE, VOLUME, d_max)
    for t in enumerate_classes(d_max):
        if mu * t.d < _pairing(t, ws):
            return PackingVerdict(Outcome.INFEASIBLE, t, d_max)
    return PackingVerdict(Outcome.FEASIBLE_UP_TO_BOUND, None, d_max)


@dataclass(frozen=True)
class GraphRow:
    a: Fraction
    result: CapacityResult


def graph_sample(a_min: RationalLike, a_max: RationalLike, steps: int, d_max: int) -> list[GraphRow]:
    """c_full at ``steps + 1`` equally spaced points of ``[a_min, a_max]``."""
    lo, hi = as_rational(a_min), as_rational(a_max)
    if lo < 1:
        raise ValueError("a_min must be at least 1")
    if not lo < hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if steps < 1:
        raise ValueError("steps must be positive")
    h = (hi - lo) / steps
    return [GraphRow(lo + i * h, c_full(lo + i * h, d_max)) for i in range(steps + 1)]
