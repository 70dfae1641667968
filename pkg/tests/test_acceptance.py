"""The ten acceptance criteria, one test each, with their time limits."""
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

import pytest

from squeeze.capacity import (
    FLAT_THRESHOLD,
    Status,
    ValueKind,
    c_full,
    c_staircase,
    obstruction_value,
    packing_feasible,
)
from squeeze.ech import TriangleSpec, c_ech_lower, ech_mu_inf, k_ab, lattice_count
from squeeze.exceptional import (
    ClassTuple,
    _diophantine_at,
    _exceptional_at,
    enumerate_classes,
    fib_ab,
    fib_class_a,
    fib_class_b,
    fibonacci_g,
    intersection,
    is_exceptional,
    reduce,
)
from squeeze.numerics import Ordering, PerturbedRational, cmp_tau4
from squeeze.weights import weight_expansion

F = Fraction


@pytest.fixture(autouse=True)
def cold_caches():
    # time every criterion from scratch, not from another test's memo
    _diophantine_at.cache_clear()
    _exceptional_at.cache_clear()


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def random_rational(rng, lo, hi, max_den=100):
    q = rng.randint(1, max_den)
    return F(rng.randint(lo * q, hi * q), q)


def test_ac01_weight_identities():
    rng = random.Random(1)
    with within(1):
        for _ in range(1000):
            a = random_rational(rng, 1, 100)
            w = weight_expansion(a).weights
            assert sum(x * x for x in w) == a
            assert sum(w) == a + 1 - F(1, a.denominator)
        assert weight_expansion(F(25, 9)).weights == (1, 1, F(7, 9), F(2, 9), F(2, 9), F(2, 9), F(1, 9), F(1, 9))


def test_ac02_class_enumeration():
    with within(10):
        classes = enumerate_classes(10)
        for t in ("1; 1,1", "2; 1x5", "3; 2,1x6", "4; 2x3,1x5"):
            assert ClassTuple.parse(t) in classes
        assert all(t.self_intersection() == -1 for t in classes)
        assert all(intersection(s, t) >= 0 for s, t in combinations(classes, 2))


def test_ac03_fibonacci_classes():
    with within(5):
        for n in range(1, 9):
            assert is_exceptional(fib_class_a(n))
            assert is_exceptional(fib_class_b(n))
        assert is_exceptional(fib_class_b(0))
        for n in range(3, 9):
            trace = reduce(fib_class_b(n))
            assert trace.after(5) == fib_class_b(n - 2)
            assert fib_class_b(n - 2) not in [trace.after(k) for k in range(5)]


def test_ac04_staircase_values():
    with within(1):
        for a, v in ((2, 2), (4, 2), (5, F(5, 2)), (F(25, 4), F(5, 2))):
            r = c_full(a, 12)
            assert r.value_kind is ValueKind.RATIONAL and r.value == v
            assert r.status is Status.EXACT_STAIRCASE
        for n in range(9):
            _, b = fib_ab(n)
            assert obstruction_value(b, fib_class_b(n)) == F(fibonacci_g(n + 2), fibonacci_g(n + 1))


def test_ac05_flat_region():
    rng = random.Random(5)
    with within(5):
        classes = enumerate_classes(10)
        for _ in range(50):
            a = random_rational(rng, 9, 400)
            for t in classes:
                assert obstruction_value(a, t) <= F(3 * t.d - 1, t.d) < 3
            assert 9 <= a  # so 3 <= sqrt(a)
        for a in [FLAT_THRESHOLD, F(9), F(10), F(1000, 7)] + [random_rational(rng, 9, 400) for _ in range(20)]:
            r = c_full(a, 10)
            assert r.status is Status.EXACT_FLAT and r.squared == a


def test_ac06_claim_one_value():
    with within(1):
        for d_max in (3, 6, 10):
            r = c_full(7, d_max)
            assert r.value == F(8, 3) and r.status is Status.CLAIMED
            assert r.witness == ClassTuple.parse("3; 2,1x6")


def test_ac07_ech_lattice_counts():
    with within(10):
        for n in range(9):
            g0, g2 = fibonacci_g(n), fibonacci_g(n + 2)
            _, b = fib_ab(n)
            # the slant edge of T^{b_n}_{0,g_n} joins (0, g_n) to (g_{n+2}, 0)
            assert b * g0 == g2
            assert 2 * lattice_count(TriangleSpec(0, g0, PerturbedRational.exact(b))) == (g0 + 1) * (g2 + 1) + 2
        for n in range(7):
            _, b = fib_ab(n)
            t = TriangleSpec(0, fibonacci_g(n), PerturbedRational.below(b))
            assert k_ab(t) == F(fibonacci_g(n + 2), fibonacci_g(n + 1))


def test_ac08_two_route_ech_agreement():
    rng = random.Random(8)
    with within(30):
        for a in (1, 2, 4, 5, F(25, 4)):
            assert ech_mu_inf(a, 10 ** 4) == c_staircase(a).value
        sample = []
        while len(sample) < 50:
            a = random_rational(rng, 1, 7, 40)
            if cmp_tau4(a) is Ordering.LESS:
                sample.append(a)
        for a in sample:
            value, _ = c_ech_lower(a, 30, 30)
            assert value <= c_staircase(a).value


def test_ac09_volume_asymptotics():
    with within(5):
        for a in (2, 3, 7):
            v = k_ab(TriangleSpec(1000, 0, PerturbedRational.below(a)))
            # |v - sqrt(a)| <= sqrt(a)/50, checked exactly on squares
            assert F(49, 50) ** 2 * a <= v * v <= F(51, 50) ** 2 * a


def test_ac10_packing():
    with within(1):
        v = packing_feasible([F(3, 5), F(3, 5)], 1, 12)
        assert not v.feasible and v.witness == ClassTuple(1, (1, 1))
        assert packing_feasible([F(1, 2)] * 2, 1, 12).feasible
        assert packing_feasible([F(1, 2)] * 4, 1, 12).feasible
