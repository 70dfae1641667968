"""Pure-Python integer kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or when inputs exceed 64-bit range.
"""
from __future__ import annotations


def triangle_count(A: int, B: int, p: int, q: int, side: int) -> int:
    """Lattice points with x, y >= 0 and q*x + p*y <= q*A + p*B.

    ``side`` is -1, 0 or +1 for a slope infinitesimally below, at, or above
    p/q.  Points on the slant line other than (A, B) are then kept only on
    one side of row B.
    """
    rhs = q * A + p * B
    total = 0
    for y in range(rhs // p + 1):
        rem = rhs - p * y
        total += rem // q + 1
        if side and rem % q == 0:
            if (side < 0 and y < B) or (side > 0 and y > B):
                total -= 1
    return total


def diophantine_parts(d: int, cap: int) -> list[tuple[int, ...]]:
    """Nonincreasing positive m with sum 3d-1, sum of squares d*d+1, m1 <= cap."""
    target_sum = 3 * d - 1
    target_sq = d * d + 1
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def search(s: int, sq: int, top: int) -> None:
        if s == 0:
            if sq == 0:
                out.append(tuple(prefix))
            return
        for x in range(min(top, s), 0, -1):
            s2 = s - x
            sq2 = sq - x * x
            if sq2 < s2:
                # parts >= 1 force sum of squares >= sum
                continue
            if (s2 // x) * x * x + (s2 % x) ** 2 < sq2:
                # parts <= x cannot reach the squares, nor can smaller x
                break
            prefix.append(x)
            search(s2, sq2, x)
            prefix.pop()

    if target_sum > 0:
        search(target_sum, target_sq, cap)
    return out


def _count_upto(p: int, q: int, bound: int) -> int:
    # pairs (m, n) >= 0 with m*p + n*q <= bound, zero included
    return sum((bound - m * p) // q + 1 for m in range(bound // p + 1))


def diagonal_ratio_max(p: int, q: int, count: int) -> tuple[int, int]:
    """Max over k <= count of N(p/q, 1)_k / N(1, 1)_k, as (num, den)."""
    bound = max(p, q)
    while _count_upto(p, q, bound) < count + 1:
        bound *= 2
    values = []
    for m in range(bound // p + 1):
        base = m * p
        values.extend(range(base, bound + 1, q))
    values.sort()
    best_num, best_den = 0, 1
    j = 1
    threshold = 2  # last index holding value j in N(1, 1)
    for k in range(1, count + 1):
        while threshold < k:
            j += 1
            threshold = (j + 1) * (j + 2) // 2 - 1
        v = values[k]
        if v * best_den > best_num * q * j:
            best_num, best_den = v, q * j
    return best_num, best_den
