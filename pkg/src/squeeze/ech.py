"""Lattice-point capacity: triangle counts, k_{A,B}, and the N(a, b) sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import kernels
from .numerics import PerturbedRational, RationalLike, Side, as_rational


@dataclass(frozen=True)
class TriangleSpec:
    """``{x, y >= 0 : x + z*y <= A + z*B}`` with ``z`` the (perturbed) slope."""

    A: int
    B: int
    slope: PerturbedRational

    def __post_init__(self):
        if self.A < 0 or self.B < 0:
            raise ValueError("A and B must be nonnegative")
        if self.A == 0 and self.B == 0:
            raise ValueError("(A, B) = (0, 0) gives a degenerate triangle")
        if not isinstance(self.slope, PerturbedRational):
            object.__setattr__(self, "slope", PerturbedRational.exact(self.slope))
        if self.slope.base < 1:
            raise ValueError("slope must be at least 1")

    @property
    def height(self) -> Fraction:
        return self.A / self.slope.base + self.B

    @property
    def level(self) -> Fraction:
        """``A + B*a`` evaluated at the unperturbed slope."""
        return self.A + self.B * self.slope.base


def lattice_count(t: TriangleSpec) -> int:
    """Integer points of the triangle.

    With a perturbed slope, points on the slant line other than (A, B) are
    kept only on the side where the tilted line still covers them: rows
    ``y >= B`` for a slope just below, rows ``y <= B`` for a slope just above.
    """
    a = t.slope.base
    return kernels.triangle_count(t.A, t.B, a.numerator, a.denominator, int(t.slope.side))


def slant_points(A: int, B: int, a: RationalLike | PerturbedRational) -> list[tuple[int, int]]:
    """Integer points on ``x + a*y = A + a*B``, ordered by increasing x."""
    if isinstance(a, PerturbedRational):
        if a.side is not Side.EXACT:
            return [(A, B)]
        a = a.base
    a = as_rational(a)
    p, q = a.numerator, a.denominator
    rhs = q * A + p * B
    # q*x + p*y = rhs with gcd(p, q) = 1: y runs over one residue class mod q
    points = [(A, B)]
    y = B - q
    while y >= 0:
        points.append(((rhs - p * y) // q, y))
        y -= q
    y = B + q
    while p * y <= rhs:
        points.append(((rhs - p * y) // q, y))
        y += q
    return sorted(points)


def threshold_degree(count: int, k: int) -> int:
    """Smallest d >= 1 with ``count <= (d+1)(d+2)/2 + k - 1``."""
    need = count - k + 1
    # (d+1)(d+2)/2 >= need  <=>  (2d+3)^2 >= 8*need + 1
    d = max(1, (isqrt(max(8 * need + 1, 0)) - 3) // 2)
    while d > 1 and d * (d + 1) // 2 >= need:
        d -= 1
    while (d + 1) * (d + 2) // 2 < need:
        d += 1
    return d


def k_ab(t: TriangleSpec) -> Fraction:
    """``(A + B*a) / d`` with d the threshold degree of the triangle's count."""
    count = lattice_count(t)
    k = len(slant_points(t.A, t.B, t.slope))
    return t.level / threshold_degree(count, k)


def c_ech_lower(a: RationalLike, A_max: int, B_max: int) -> tuple[Fraction, TriangleSpec]:
    """Max of k_{A,B} over the grid, with the slope just below ``a``.

    The first maximiser in (A, B) order is returned as witness.
    """
    a = as_rational(a)
    if a < 1:
        raise ValueError(f"c_ECH needs a >= 1, got {a}")
    slope = PerturbedRational.below(a)
    best_value = Fraction(-1)
    best: TriangleSpec | None = None
    for A in range(A_max + 1):
        for B in range(B_max + 1):
            if A == 0 and B == 0:
                continue
            t = TriangleSpec(A, B, slope)
            v = k_ab(t)
            if v > best_value:
                best_value, best = v, t
    if best is None:
        raise ValueError("search grid is empty")
    return best_value, best


@dataclass(frozen=True)
class NSequence:
    """Nonzero values ``m*a + n*b`` (m, n >= 0) up to ``generated_through``.

    Every value not exceeding the bound is present with its multiplicity,
    so ``terms`` is an exact prefix of the infinite sequence.
    """

    a: Fraction
    b: Fraction
    terms: tuple[Fraction, ...]
    generated_through: Fraction

    def entry(self, k: int) -> Fraction:
        """The k-th entry, counting from 1."""
        if not 1 <= k <= len(self.terms):
            raise IndexError(f"entry {k} is outside the certified prefix of {len(self.terms)}")
        return self.terms[k - 1]

    def __len__(self) -> int:
        return len(self.terms)


def n_sequence(a: RationalLike, b: RationalLike, bound: RationalLike) -> NSequence:
    a, b, bound = as_rational(a), as_rational(b), as_rational(bound)
    if a <= 0 or b <= 0:
        raise ValueError("N(a, b) needs positive a and b")
    if bound <= 0:
        raise ValueError("bound must be positive")
    terms = []
    m = 0
    while m * a <= bound:
        n = 0 if m else 1
        while m * a + n * b <= bound:
            terms.append(m * a + n * b)
            n += 1
        m += 1
    terms.sort()
    return NSequence(a, b, tuple(terms), bound)


def dominates(s: NSequence, t: NSequence) -> bool:
    """True iff ``s`` is entrywise <= ``t`` on their common certified prefix."""
    n = min(len(s), len(t))
    if n == 0:
        raise ValueError("no shared certified prefix to compare")
    return all(x <= y for x, y in zip(s.terms[:n], t.terms[:n]))


def ech_mu_inf(a: RationalLike, term_count: int) -> Fraction:
    """Lower bound for ``inf{mu : N(a,1) <= N(mu,mu)}`` from the first terms.

    Since ``N(mu, mu) = mu * N(1, 1)`` the infimum is the supremum of the
    entry ratios, so no search over mu is needed.
    """
    a = as_rational(a)
    if a < 1:
        raise ValueError(f"c_ECH needs a >= 1, got {a}")
    if term_count < 1:
        raise ValueError("term_count must be positive")
    num, den = kernels.diagonal_ratio_max(a.numerator, a.denominator, term_count)
    return Fraction(num, den)
