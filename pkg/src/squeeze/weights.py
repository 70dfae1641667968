"""Weight expansions, continued fractions and the Riemenschneider staircase."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .numerics import RationalLike, as_rational

HORIZONTAL = "h"
VERTICAL = "v"


def _check_at_least_one(a: RationalLike) -> Fraction:
    a = as_rational(a)
    if a < 1:
        raise ValueError(f"weight expansion needs a >= 1, got {a}")
    return a


@dataclass(frozen=True)
class WeightExpansion:
    a: Fraction
    weights: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.weights)

    @property
    def labels(self) -> tuple[int, ...]:
        q = self.a.denominator
        return tuple(int(w * q) for w in self.weights)

    def runs(self) -> list[tuple[Fraction, int]]:
        """``(weight, count)`` blocks, one per partial quotient."""
        out: list[tuple[Fraction, int]] = []
        for w in self.weights:
            if out and out[-1][0] == w:
                out[-1] = (w, out[-1][1] + 1)
            else:
                out.append((w, 1))
        return out

    def __iter__(self):
        return iter(self.weights)

    def __len__(self) -> int:
        return len(self.weights)


def _euclid_blocks(p: int, q: int) -> list[tuple[int, int]]:
    # (label, multiplicity) blocks of the subtractive Euclidean algorithm
    blocks = []
    while q:
        n, r = divmod(p, q)
        blocks.append((q, n))
        p, q = q, r
    return blocks


def weight_expansion(a: RationalLike) -> WeightExpansion:
    """Weight vector of ``a >= 1``.

    Each block of equal weights is produced at once: the current weight is
    repeated as many times as it fits into the previous remainder, which is
    the division step of Euclid's algorithm on ``(p, q)``.
    """
    a = _check_at_least_one(a)
    q = a.denominator
    weights: list[Fraction] = []
    mults: list[int] = []
    for label, n in _euclid_blocks(a.numerator, q):
        weights.extend([Fraction(label, q)] * n)
        mults.append(n)
    return WeightExpansion(a, tuple(weights), tuple(mults))


def multiplicities(a: RationalLike) -> list[int]:
    a = _check_at_least_one(a)
    return [n for _, n in _euclid_blocks(a.numerator, a.denominator)]


def labels(a: RationalLike) -> list[int]:
    return list(weight_expansion(a).labels)


def length(a: RationalLike) -> int:
    return sum(multiplicities(a))


def cf_value(terms: Sequence[int]) -> Fraction:
    """Evaluate the regular continued fraction ``[n0; n1, ..., nk]``."""
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for n in reversed(terms[:-1]):
        value = n + 1 / value
    return value


@dataclass(frozen=True)
class HJExpansion:
    """``e0 - 1/(e1 - 1/(... - 1/er))`` with every ``ei >= 2``."""

    coefficients: tuple[int, ...]

    def value(self) -> Fraction:
        value = Fraction(self.coefficients[-1])
        for e in reversed(self.coefficients[:-1]):
            value = e - 1 / value
        return value

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.coefficients)) + "]"


def _hj_coefficients(p: int, q: int) -> tuple[int, ...]:
    coeffs = []
    while q:
        e = -(-p // q)
        coeffs.append(e)
        p, q = q, e * q - p
    return tuple(coeffs)


def hj_expansion(p: int, q: int) -> tuple[HJExpansion, HJExpansion]:
    """Hirzebruch-Jung expansions of ``p/q`` and of ``p/(p-q)``."""
    if not (p > q >= 1):
        raise ValueError(f"need p > q >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    return HJExpansion(_hj_coefficients(p, q)), HJExpansion(_hj_coefficients(p, p - q))


@dataclass(frozen=True)
class StaircaseDiagram:
    runs: tuple[tuple[str, int], ...]
    labels: tuple[int, ...]

    def dots(self) -> list[tuple[int, int]]:
        """Dot positions ``(column, row)``, starting at ``(0, 0)`` (the white dot).

        Columns decrease to the left and rows decrease downwards.  Every run
        opens with one step in the direction of the run before it, so a
        vertical run starts in the row of the horizontal run preceding it.
        """
        steps: list[str] = []
        previous = HORIZONTAL
        for i, (direction, count) in enumerate(self.runs):
            if i == 0:
                steps.extend([direction] * (count - 1))
            else:
                steps.append(previous)
                steps.extend([direction] * (count - 1))
            previous = direction
        col = row = 0
        out = [(col, row)]
        for s in steps:
            if s == HORIZONTAL:
                col -= 1
            else:
                row -= 1
            out.append((col, row))
        return out

    def reconstruct_labels(self) -> tuple[int, ...]:
        """Labels from the dot picture alone.

        Starting with 1 at the bottom-left dot and walking back up: after a
        horizontal move the new label is the sum over the column just left,
        after a vertical move it is the sum over the row just left.
        """
        dots = self.dots()
        values = [0] * len(dots)
        values[-1] = 1
        for i in range(len(dots) - 2, -1, -1):
            col, row = dots[i + 1]
            if dots[i][1] == row:
                values[i] = sum(values[j] for j in range(i + 1, len(dots)) if dots[j][0] == col)
            else:
                values[i] = sum(values[j] for j in range(i + 1, len(dots)) if dots[j][1] == row)
        return tuple(values)

    def row_black_counts(self) -> list[int]:
        """Black dots per row, top to bottom."""
        rows: dict[int, int] = {}
        for col, row in self.dots()[1:]:
            rows[row] = rows.get(row, 0) + 1
        return [rows[r] for r in sorted(rows, reverse=True)]

    def column_black_counts(self) -> list[int]:
        """Black dots per column, right to left."""
        cols: dict[int, int] = {}
        for col, row in self.dots()[1:]:
            cols[col] = cols.get(col, 0) + 1
        return [cols[c] for c in sorted(cols, reverse=True)]


def staircase(a: RationalLike) -> StaircaseDiagram:
    a = as_rational(a)
    if a <= 2:
        hint = ""
        if 1 < a < 2:
            hint = f"; use the companion fraction {a.numerator}/{a.numerator - a.denominator}"
        raise ValueError(f"staircase needs p/q > 2, got {a}{hint}")
    mults = multiplicities(a)
    runs = tuple(
        (HORIZONTAL if i % 2 == 0 else VERTICAL, n) for i, n in enumerate(mults)
    )
    return StaircaseDiagram(runs, tuple(labels(a)))
