from fractions import Fraction
from math import gcd

import pytest

from twisted_sectors.age import (
    MarkConvention,
    age,
    age_breakdown,
    mark_weight,
    point_weight,
    sigma_indicator,
)
from twisted_sectors.enumeration import admissible_data
from twisted_sectors.sector import SectorDatum, codimension, hyperelliptic_datum, twin


def Y(g, n, gp, N, d, a):
    return SectorDatum(g=g, n=n, g_prime=gp, order=N, d=d, a=a)


def oracle_point_weight(i, N):
    # integer form: N^2 T_i = sum_k k * ((k*i mod N) + N * [k*i + gcd(i,N) != 0 mod N])
    total = 0
    for k in range(1, N):
        total += k * ((k * i) % N + N * ((k * i + gcd(i, N)) % N != 0))
    return Fraction(total, N * N)


def oracle_mark_weight(i, N):
    # the tangent character is omega^(-inv(i)); its age is the unique k/N with k*i = -1 mod N
    k = next(k for k in range(1, N) if (k * i) % N == N - 1)
    return Fraction(k, N)


@pytest.mark.parametrize("k, i, N, expected", [(1, 1, 2, 0), (1, 1, 3, 1), (3, 1, 4, 0)])
def test_sigma_indicator(k, i, N, expected):
    assert sigma_indicator(k, i, N) == expected


@pytest.mark.parametrize("k, i, N", [(0, 1, 3), (1, 3, 3), (1, 1, 1)])
def test_sigma_indicator_range(k, i, N):
    with pytest.raises(ValueError):
        sigma_indicator(k, i, N)


@pytest.mark.parametrize(
    "i, N, expected",
    [
        (1, 2, Fraction(1, 4)),
        (1, 3, Fraction(8, 9)),
        (2, 3, Fraction(10, 9)),
        (1, 4, Fraction(13, 8)),
        (2, 4, Fraction(1)),
        (3, 4, Fraction(15, 8)),
    ],
)
def test_point_weight_examples(i, N, expected):
    assert point_weight(i, N) == expected == oracle_point_weight(i, N)


def test_point_weight_matches_oracle():
    for N in range(2, 41):
        for i in range(1, N):
            assert point_weight(i, N) == oracle_point_weight(i, N)


@pytest.mark.parametrize(
    "i, N, expected",
    [(1, 2, Fraction(1, 2)), (1, 3, Fraction(2, 3)), (2, 3, Fraction(1, 3)), (1, 4, Fraction(3, 4))],
)
def test_mark_weight_examples(i, N, expected):
    assert mark_weight(i, N) == expected == oracle_mark_weight(i, N)


def test_mark_weight_is_complement_of_printed_sum():
    for N in range(2, 41):
        for i in range(1, N):
            if gcd(i, N) != 1:
                continue
            complement = Fraction(sum(k * (1 - sigma_indicator(k, i, N)) for k in range(1, N)), N)
            assert mark_weight(i, N) == complement == oracle_mark_weight(i, N)
            assert 0 < mark_weight(i, N) < 1


def test_mark_weight_rejects_noncoprime():
    with pytest.raises(ValueError):
        mark_weight(2, 4)


def test_printed_mark_weight_vanishes_at_order_two():
    assert mark_weight(1, 2, MarkConvention.PRINTED) == 0


def test_pairing_identities():
    for N in range(2, 41):
        for i in range(1, N):
            s = gcd(i, N)
            assert point_weight(i, N) + point_weight(N - i, N) == Fraction(3 * N - 3 * s - 2, 2)
            if s == 1:
                assert mark_weight(i, N) + mark_weight(N - i, N) == 1


@pytest.mark.parametrize(
    "y, expected",
    [
        (Y(3, 0, 0, 2, [8], [0]), Fraction(1, 2)),
        (Y(1, 1, 0, 2, [4], [1]), Fraction(0)),
        (Y(1, 1, 0, 3, [3, 0], [1, 0]), Fraction(1, 3)),
        (Y(1, 1, 0, 3, [0, 3], [0, 1]), Fraction(2, 3)),
        (Y(3, 0, 0, 3, [4, 1], [0, 0]), Fraction(5, 3)),
        (Y(3, 0, 0, 3, [1, 4], [0, 0]), Fraction(7, 3)),
    ],
)
def test_age_examples(y, expected):
    assert age(y) == expected
    # hand evaluation of the closed formula with the oracles above
    N = y.order
    direct = Fraction((3 * y.g_prime - 3) * (N - 1), 2)
    direct += sum(ai * oracle_mark_weight(i, N) for i, ai in enumerate(y.a, 1) if ai)
    direct += sum(di * oracle_point_weight(i, N) for i, di in enumerate(y.d, 1))
    assert direct == expected


@pytest.mark.parametrize(
    "y, base, mark, per_sigma, total",
    [
        (Y(3, 0, 0, 2, [8], [0]), Fraction(-3, 2), 0, {1: Fraction(2)}, Fraction(1, 2)),
        (Y(1, 1, 0, 3, [3, 0], [1, 0]), -3, Fraction(2, 3), {1: Fraction(8, 3)}, Fraction(1, 3)),
        (
            Y(1, 1, 0, 4, [2, 1, 0], [1, 0, 0]),
            Fraction(-9, 2),
            Fraction(3, 4),
            {1: Fraction(13, 4), 2: Fraction(1)},
            Fraction(1, 2),
        ),
    ],
)
def test_age_breakdown_examples(y, base, mark, per_sigma, total):
    parts = age_breakdown(y)
    assert parts.base == base
    assert parts.mark == mark
    assert parts.per_sigma == per_sigma
    assert parts.total == total == age(y)


def test_breakdown_keys_are_proper_divisors():
    parts = age_breakdown(Y(1, 1, 0, 6, [1, 1, 1, 0, 0], [1, 0, 0, 0, 0]))
    assert list(parts.per_sigma) == [1, 2, 3]


@pytest.mark.parametrize("g, n", [(g, n) for g in range(0, 6) for n in range(0, 5) if 2 * g - 2 + n > 0])
def test_twin_identity_and_positivity(g, n):
    for y in admissible_data(g, n):
        a, b = age(y), age(twin(y))
        assert a + b == codimension(y)
        assert a >= 0
        if a == 0:
            assert codimension(y) == 0 and twin(y) == y
        if twin(y) == y:
            assert 2 * a == codimension(y)


def test_mark_parts_of_twins():
    for g, n in [(1, 1), (2, 2), (3, 3), (4, 1)]:
        for y in admissible_data(g, n):
            N = y.order
            gap = abs(age_breakdown(y).mark - age_breakdown(twin(y)).mark)
            inv = lambda s: pow(s, -1, N)
            expected = abs(sum(ai * (inv(i) - inv(N - i)) for i, ai in enumerate(y.a, 1) if ai))
            assert gap == Fraction(expected, N)


def test_printed_convention_breaks_twin_identity():
    y = hyperelliptic_datum(2, 1)
    assert age(y, MarkConvention.PRINTED) * 2 != codimension(y)
    assert age(y) * 2 == codimension(y)
