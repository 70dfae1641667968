"""Batch check of every computable identity, used by ``squeeze verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .capacity import Status, c_full, c_lower, c_staircase, obstruction_value, packing_feasible
from .ech import (
    TriangleSpec,
    c_ech_lower,
    ech_mu_inf,
    k_ab,
    lattice_count,
    n_sequence,
    slant_points,
)
from .exceptional import (
    CLAIM_ONE_CLASS,
    ClassTuple,
    cremona_move,
    enumerate_classes,
    fib_ab,
    fib_class_a,
    fib_class_b,
    fibonacci_g,
    intersection,
    is_exceptional,
    reduce,
)
from .numerics import TAU4, Ordering, PerturbedRational, cmp_sqrt, cmp_tau4
from .weights import cf_value, hj_expansion, staircase, weight_expansion


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _random_rational(rng: random.Random, lo: int, hi: int, max_den: int = 60) -> Fraction:
    q = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * q, hi * q), q)


def _below_tau4(rng: random.Random) -> Fraction:
    while True:
        a = _random_rational(rng, 1, 7)
        if cmp_tau4(a) is Ordering.LESS:
            return a


def check_weight_identities(rng, nmax):
    for _ in range(300):
        a = _random_rational(rng, 1, 100)
        w = weight_expansion(a)
        if sum(x * x for x in w) != a:
            return f"sum of squares fails at {a}"
        if sum(w) != a + 1 - Fraction(1, a.denominator):
            return f"sum fails at {a}"
        if [n for _, n in w.runs()] != list(w.multiplicities) or cf_value(w.multiplicities) != a:
            return f"multiplicities fail at {a}"


def check_25_9_expansion(rng, nmax):
    expected = tuple(Fraction(x, 9) for x in (9, 9, 7, 2, 2, 2, 1, 1))
    if weight_expansion(Fraction(25, 9)).weights != expected:
        return "w(25/9) differs from (1,1,7/9,2/9,2/9,2/9,1/9,1/9)"


def check_hj_and_staircase(rng, nmax):
    for _ in range(100):
        a = _random_rational(rng, 2, 40)
        if a <= 2:
            continue
        p, q = a.numerator, a.denominator
        hj, companion = hj_expansion(p, q)
        if hj.value() != a or companion.value() != Fraction(p, p - q):
            return f"HJ round trip fails at {a}"
        diagram = staircase(a)
        if diagram.reconstruct_labels() != diagram.labels:
            return f"label reconstruction fails at {a}"
        if [e - 1 for e in hj.coefficients] != diagram.row_black_counts():
            return f"row dot counts fail at {a}"
        if [e - 1 for e in companion.coefficients] != diagram.column_black_counts():
            return f"column dot counts fail at {a}"


def check_cremona_invariants(rng, nmax):
    for _ in range(300):
        m = tuple(rng.randint(-3, 12) for _ in range(rng.randint(0, 10)))
        t = ClassTuple(rng.randint(0, 20), m)
        u = cremona_move(t)
        if u.self_intersection() != t.self_intersection() or u.first_chern() != t.first_chern():
            return f"move changes invariants of {t}"


def check_enumeration(rng, nmax):
    classes = enumerate_classes(8)
    for t in classes:
        if t.self_intersection() != -1:
            return f"{t} has self-intersection {t.self_intersection()}"
    for t, u in combinations(classes, 2):
        if intersection(t, u) < 0:
            return f"{t}.{u} < 0"


def check_fibonacci_identities(rng, nmax):
    for n in range(nmax + 1):
        g0, g1, g2 = fibonacci_g(n), fibonacci_g(n + 1), fibonacci_g(n + 2)
        if g0 + g2 != 3 * g1:
            return f"g_n + g_n+2 = 3 g_n+1 fails at n={n}"
        if n >= 1 and g0 * g2 != g1 * g1 + 1:
            return f"g_n g_n+2 = g_n+1^2 + 1 fails at n={n}"
        a, b = fib_ab(n)
        a_next, _ = fib_ab(n + 1)
        if not a < b < a_next:
            return f"a_n < b_n < a_n+1 fails at n={n}"


def check_fibonacci_classes(rng, nmax):
    for n in range(1, nmax + 1):
        if not is_exceptional(fib_class_b(n)):
            return f"E(b_{n}) not exceptional"
        if not is_exceptional(fib_class_a(n)):
            return f"E(a_{n}) not exceptional"
    for n in range(3, nmax + 1):
        if reduce(fib_class_b(n)).after(5) != fib_class_b(n - 2):
            return f"E(b_{n}) does not reach E(b_{n - 2}) in five moves"


def check_staircase_values(rng, nmax):
    for a, v in ((2, 2), (4, 2), (5, Fraction(5, 2)), (Fraction(25, 4), Fraction(5, 2))):
        if c_staircase(a).value != v:
            return f"c({a}) != {v}"
    for n in range(nmax + 1):
        _, b = fib_ab(n)
        target = Fraction(fibonacci_g(n + 2), fibonacci_g(n + 1))
        if obstruction_value(b, fib_class_b(n)) != target:
            return f"obstruction of E(b_{n}) at b_{n} is not g_n+2/g_n+1"


def check_dominance(rng, nmax):
    for _ in range(40):
        a = _below_tau4(rng)
        if c_lower(a, 8).compare(c_staircase(a)) is Ordering.GREATER:
            return f"lower bound exceeds staircase at {a}"


def check_biran(rng, nmax):
    classes = enumerate_classes(10)
    for _ in range(20):
        a = _random_rational(rng, 9, 200)
        for t in classes:
            v = obstruction_value(a, t)
            if not v <= Fraction(3 * t.d - 1, t.d) < 3 or cmp_sqrt(3, a) is Ordering.GREATER:
                return f"Biran bound fails for {t} at {a}"
        r = c_full(a, 10)
        if r.status is not Status.EXACT_FLAT or r.squared != a:
            return f"c({a}) is not sqrt(a) on the flat region"


def check_claim_one(rng, nmax):
    r = c_full(7, 3)
    if r.value != Fraction(8, 3) or r.status is not Status.CLAIMED or r.witness != CLAIM_ONE_CLASS:
        return f"c(7) gave {r}"


def check_monotone(rng, nmax):
    pts = sorted({_below_tau4(rng) for _ in range(40)})
    values = [c_staircase(a).value for a in pts]
    for (a1, v1), (a2, v2) in zip(zip(pts, values), zip(pts[1:], values[1:])):
        if v1 > v2 or v1 / a1 < v2 / a2:
            return f"monotonicity fails between {a1} and {a2}"


def check_fibonacci_pairing(rng, nmax):
    classes = enumerate_classes(10)
    for n in range(1, min(nmax, 4) + 1):
        e = fib_class_a(n)
        for t in classes:
            if t != e and intersection(t, e) < 0:
                return f"{t}.E(a_{n}) < 0"


def check_ech_counts(rng, nmax):
    for n in range(1, nmax + 1):
        g0, g1, g2 = fibonacci_g(n), fibonacci_g(n + 1), fibonacci_g(n + 2)
        _, b = fib_ab(n)
        count = lattice_count(TriangleSpec(0, g0, PerturbedRational.exact(b)))
        if 2 * count != (g0 + 1) * (g2 + 1) + 2 or 2 * count != g1 * g1 + 3 * g1 + 4:
            return f"count formula fails at n={n}"
        if k_ab(TriangleSpec(0, g0, PerturbedRational.below(b))) != Fraction(g2, g1):
            return f"k at b_{n} is not g_n+2/g_n+1"


def check_below_vs_exact(rng, nmax):
    for _ in range(200):
        a = _random_rational(rng, 1, 12, 12)
        A, B = rng.randint(0, 20), rng.randint(0, 20)
        if A == B == 0:
            continue
        pts = slant_points(A, B, a)
        A0, B0 = pts[0]
        k = len(pts)
        exact = lattice_count(TriangleSpec(A0, B0, PerturbedRational.exact(a)))
        below = lattice_count(TriangleSpec(A0, B0, PerturbedRational.below(a)))
        if below != exact - (k - 1):
            return f"Below/Exact mismatch at A={A0}, B={B0}, a={a}"


def check_ech_routes(rng, nmax):
    for a in (1, 2, 4, 5, Fraction(25, 4)):
        if ech_mu_inf(a, 10 ** 4) != c_staircase(a).value:
            return f"N-sequence bound differs from c({a})"
    for _ in range(10):
        a = _below_tau4(rng)
        value, _ = c_ech_lower(a, 20, 20)
        if value > c_staircase(a).value:
            return f"c_ECH lower bound exceeds c({a})"


def check_volume_asymptotics(rng, nmax):
    for a in (2, 3, 7):
        v = k_ab(TriangleSpec(1000, 0, PerturbedRational.below(a)))
        # |v - sqrt(a)| <= 2% of sqrt(a), compared exactly through squares
        if not Fraction(49, 50) ** 2 * a <= v * v <= Fraction(51, 50) ** 2 * a:
            return f"k_(1000,0) at {a} is {float(v)}"


def check_nsequence(rng, nmax):
    for a, b in ((1, 1), (2, 1), (Fraction(5, 2), Fraction(3, 2))):
        seq = n_sequence(a, b, 12)
        brute = sorted(
            m * Fraction(a) + n * Fraction(b)
            for m in range(13) for n in range(13)
            if (m or n) and m * Fraction(a) + n * Fraction(b) <= 12
        )
        if list(seq.terms) != brute:
            return f"N({a},{b}) differs from brute force"


def check_packing(rng, nmax):
    v = packing_feasible([Fraction(3, 5)] * 2, 1, 10)
    if v.feasible or v.witness != ClassTuple(1, (1, 1)):
        return "two balls of size 3/5 should be blocked by (1;1,1)"
    for ws in ([Fraction(1, 2)] * 2, [Fraction(1, 2)] * 4):
        if not packing_feasible(ws, 1, 10).feasible:
            return f"{len(ws)} balls of size 1/2 should pack"


def check_tau4(rng, nmax):
    if cmp_tau4(6) is not Ordering.LESS or cmp_tau4(7) is not Ordering.GREATER:
        return "tau^4 comparison wrong"
    if not Fraction(6854, 1000) < TAU4 < Fraction(6855, 1000):
        return "tau^4 out of (6.854, 6.855)"


CHECKS: list[tuple[str, Callable]] = [
    ("tau^4 comparisons", check_tau4),
    ("weight identities", check_weight_identities),
    ("w(25/9) values", check_25_9_expansion),
    ("HJ expansions and staircase", check_hj_and_staircase),
    ("Cremona invariants", check_cremona_invariants),
    ("class enumeration", check_enumeration),
    ("Fibonacci identities", check_fibonacci_identities),
    ("Fibonacci classes", check_fibonacci_classes),
    ("staircase values", check_staircase_values),
    ("staircase monotonicity", check_monotone),
    ("lower bound <= staircase", check_dominance),
    ("Biran bound / flat region", check_biran),
    ("c(7) = 8/3 claimed", check_claim_one),
    ("pairing with E(a_n)", check_fibonacci_pairing),
    ("ECH triangle counts", check_ech_counts),
    ("Below vs Exact counts", check_below_vs_exact),
    ("ECH two routes", check_ech_routes),
    ("volume asymptotics", check_volume_asymptotics),
    ("N-sequence generation", check_nsequence),
    ("ball packing", check_packing),
]


def run_checks(nmax: int = 8, seed: int = 0) -> Iterator[CheckResult]:
    for name, fn in CHECKS:
        rng = random.Random(f"{seed}:{name}")
        try:
            failure = fn(rng, nmax)
        except Exception as exc:  # a crash is reported as a failed check
            failure = f"{type(exc).__name__}: {exc}"
        yield CheckResult(name, failure is None, failure or "")
