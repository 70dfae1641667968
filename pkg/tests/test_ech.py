import random
from fractions import Fraction
from math import floor

import pytest
from hypothesis import given, settings, strategies as st

from squeeze.capacity import c_staircase
from squeeze.ech import (
    NSequence,
    TriangleSpec,
    c_ech_lower,
    dominates,
    ech_mu_inf,
    k_ab,
    lattice_count,
    n_sequence,
    slant_points,
    threshold_degree,
)
from squeeze.exceptional import fib_ab, fibonacci_g
from squeeze.numerics import Ordering, PerturbedRational as P, Side, cmp_tau4

F = Fraction


def brute_count(A, B, z: P):
    """Every (x, y) in the bounding box, tested against the perturbed half-plane."""
    level = A + B * z.base
    n = 0
    for y in range(int(level / z.base) + 2):
        for x in range(floor(level) + 2):
            # x + z*y <= A + z*B  <=>  (x - A) + z*(y - B) <= 0
            if z.affine_sign(x - A, y - B) <= 0:
                n += 1
    return n


def brute_slant(A, B, a):
    level = A + B * a
    return sorted((x, y) for y in range(int(level / a) + 1) for x in range(floor(level) + 1)
                  if x + a * y == level)


def brute_degree(count, k):
    d = 1
    while count > F((d + 1) * (d + 2), 2) + k - 1:
        d += 1
    return d


@pytest.mark.parametrize("A,B,z,expected", [
    (0, 1, P.exact(5), 7),
    (0, 1, P.below(5), 6),
    (1, 0, P.exact(1), 3),
])
def test_lattice_count_examples(A, B, z, expected):
    assert lattice_count(TriangleSpec(A, B, z)) == expected


triangles = st.builds(
    lambda A, B, a, side: (A, B, P(a, side)),
    st.integers(0, 25), st.integers(0, 25),
    st.fractions(min_value=1, max_value=15, max_denominator=12),
    st.sampled_from(list(Side)),
).filter(lambda t: t[0] or t[1])


@settings(max_examples=200)
@given(triangles)
def test_lattice_count_matches_brute_force(t):
    A, B, z = t
    assert lattice_count(TriangleSpec(A, B, z)) == brute_count(A, B, z)


@pytest.mark.parametrize("A,B,a,expected", [
    (0, 1, 5, [(0, 1), (5, 0)]),
    (3, 0, 2, [(1, 1), (3, 0)]),
])
def test_slant_points_examples(A, B, a, expected):
    assert slant_points(A, B, a) == expected


def test_slant_points_perturbed():
    assert slant_points(1, 0, P.below(3)) == [(1, 0)]
    assert slant_points(1, 0, P.above(3)) == [(1, 0)]


@given(st.integers(0, 30), st.integers(0, 30), st.fractions(min_value=1, max_value=12, max_denominator=10))
def test_slant_points_brute_force(A, B, a):
    assert slant_points(A, B, a) == brute_slant(A, B, a)


@given(st.integers(0, 5000), st.integers(1, 5))
def test_threshold_degree(count, k):
    assert threshold_degree(count, k) == brute_degree(count, k)


@pytest.mark.parametrize("A,B,a,expected", [
    (0, 1, 5, F(5, 2)),
    (0, 1, 4, F(2)),
    (1, 0, 2, F(1)),
])
def test_k_ab_examples(A, B, a, expected):
    assert k_ab(TriangleSpec(A, B, P.below(a))) == expected


@settings(max_examples=150)
@given(triangles)
def test_k_ab_brute_force(t):
    A, B, z = t
    count = brute_count(A, B, z)
    k = 1 if z.side else len(brute_slant(A, B, z.base))
    assert k_ab(TriangleSpec(A, B, z)) == (A + B * z.base) / brute_degree(count, k)


def test_triangle_validation():
    with pytest.raises(ValueError):
        TriangleSpec(0, 0, P.exact(2))
    with pytest.raises(ValueError):
        TriangleSpec(1, 0, P.exact(F(1, 2)))


def test_below_is_exact_minus_extra_slant_points():
    rng = random.Random(5)
    for _ in range(300):
        q = rng.randint(1, 12)
        a = F(rng.randint(q, 12 * q), q)
        A, B = rng.randint(0, 30), rng.randint(0, 30)
        if A == B == 0:
            continue
        pts = slant_points(A, B, a)
        A0, B0 = pts[0]
        exact = lattice_count(TriangleSpec(A0, B0, P.exact(a)))
        below = lattice_count(TriangleSpec(A0, B0, P.below(a)))
        assert below == exact - (len(pts) - 1)
        A1, B1 = pts[-1]
        above = lattice_count(TriangleSpec(A1, B1, P.above(a)))
        assert above == exact - (len(pts) - 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_fibonacci_triangle_counts(n):
    g0, g1, g2 = (fibonacci_g(n + i) for i in range(3))
    _, b = fib_ab(n)
    count = lattice_count(TriangleSpec(0, g0, P.exact(b)))
    assert 2 * count == (g0 + 1) * (g2 + 1) + 2
    assert 2 * count == g1 * g1 + 3 * g1 + 4
    assert slant_points(0, g0, b) == [(0, g0), (g2, 0)]


def test_c_ech_lower_examples():
    value, witness = c_ech_lower(5, 10, 10)
    assert value >= F(5, 2)
    assert c_ech_lower(1, 10, 10)[0] == 1
    value, witness = c_ech_lower(F(13, 2), 15, 15)
    assert value >= F(13, 5)
    assert k_ab(TriangleSpec(0, 2, P.below(F(13, 2)))) == F(13, 5)


def test_c_ech_lower_witness_is_first_maximiser():
    value, witness = c_ech_lower(5, 6, 6)
    assert k_ab(witness) == value
    for A in range(7):
        for B in range(7):
            if (A, B) < (witness.A, witness.B) and (A or B):
                assert k_ab(TriangleSpec(A, B, P.below(5))) < value


@pytest.mark.parametrize("a,b,bound,expected", [
    (1, 1, 3, [1, 1, 2, 2, 2, 3, 3, 3, 3]),
    (2, 1, 4, [1, 2, 2, 3, 3, 4, 4, 4]),
    (5, 1, 5, [1, 2, 3, 4, 5, 5]),
])
def test_n_sequence_examples(a, b, bound, expected):
    assert list(n_sequence(a, b, bound).terms) == expected


@given(st.fractions(min_value=F(1, 4), max_value=6, max_denominator=8),
       st.fractions(min_value=F(1, 4), max_value=6, max_denominator=8),
       st.fractions(min_value=1, max_value=15, max_denominator=4))
def test_n_sequence_brute_force(a, b, bound):
    seq = n_sequence(a, b, bound)
    brute = sorted(m * a + n * b for m in range(int(bound / a) + 1) for n in range(int(bound / b) + 1)
                   if (m or n) and m * a + n * b <= bound)
    assert list(seq.terms) == brute


def test_dominates_examples():
    assert dominates(n_sequence(1, 1, 30), n_sequence(2, 2, 30))
    s = n_sequence(4, 1, 10)
    t = n_sequence(2, 2, 20)
    assert len(s) >= 20 or len(t) >= 20
    assert dominates(NSequence(s.a, s.b, s.terms[:20], s.generated_through), t)
    assert not dominates(n_sequence(5, 1, 10), n_sequence(2, 2, 10))
    assert n_sequence(5, 1, 10).entry(5) == 5 and n_sequence(2, 2, 10).entry(5) == 4


def test_dominates_needs_overlap():
    empty = NSequence(F(1), F(1), (), F(1, 2))
    with pytest.raises(ValueError):
        dominates(empty, n_sequence(1, 1, 3))


def brute_mu(a, count):
    s = n_sequence(a, 1, 1)
    bound = F(1)
    while len(s) < count:
        bound *= 2
        s = n_sequence(a, 1, bound)
    diag = n_sequence(1, 1, bound)
    return max(x / y for x, y in zip(s.terms[:count], diag.terms))


@pytest.mark.parametrize("a", [1, 2, 4, 5, F(25, 4), F(7, 3), F(13, 2)])
@pytest.mark.parametrize("count", [1, 5, 40, 300])
def test_ech_mu_inf_brute_force(a, count):
    assert ech_mu_inf(a, count) == brute_mu(F(a), count)


@pytest.mark.parametrize("a,count,expected", [
    (1, 50, F(1)),
    (5, 5, F(5, 2)),
    (4, 2, F(2)),
])
def test_ech_mu_inf_examples(a, count, expected):
    assert ech_mu_inf(a, count) == expected


def test_ech_mu_inf_monotone_in_count():
    values = [ech_mu_inf(F(19, 4), c) for c in (1, 3, 10, 50, 400, 3000)]
    assert values == sorted(values)


@pytest.mark.parametrize("a", [1, 2, 4, 5, F(25, 4)])
def test_two_routes_agree(a):
    assert ech_mu_inf(a, 10 ** 4) == c_staircase(a).value


def test_volume_lower_bound_asymptotics():
    for a in (2, 3, 7):
        v = k_ab(TriangleSpec(1000, 0, P.below(a)))
        assert abs(float(v) - a ** 0.5) <= 0.02 * a ** 0.5


def test_claim_two_direction_sample():
    rng = random.Random(17)
    for _ in range(15):
        q = rng.randint(1, 30)
        a = F(rng.randint(q, 6 * q), q)
        if cmp_tau4(a) is not Ordering.LESS:
            continue
        assert c_ech_lower(a, 15, 15)[0] <= c_staircase(a).value
