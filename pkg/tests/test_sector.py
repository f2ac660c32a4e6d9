from functools import reduce
from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from twisted_sectors.sector import (
    E_CONNECT,
    E_FAN,
    E_MARKS,
    E_RH,
    E_SHAPE,
    E_STABILITY,
    InvalidDatumError,
    SectorDatum,
    codimension,
    hyperelliptic_datum,
    is_hyperelliptic,
    multiplicity,
    sector_dimension,
    total_genus,
    twin,
    validate,
)


def Y(g, n, gp, N, d, a):
    return SectorDatum(g=g, n=n, g_prime=gp, order=N, d=d, a=a)


def naive_admissible(y):
    """Independent restatement of the four admissibility conditions."""
    g, n, gp, N, d, a = y.g, y.n, y.g_prime, y.order, y.d, y.a
    if 2 * g - 2 + n <= 0:
        return False
    rh = N * (2 * gp - 2)
    for k in range(N - 1):
        rh += (N - gcd(k + 1, N)) * d[k]
    if rh != 2 * g - 2:
        return False
    if sum((k + 1) * d[k] for k in range(N - 1)) % N != 0:
        return False
    if sum(a) != n:
        return False
    for k in range(N - 1):
        if a[k] > d[k] or (gcd(k + 1, N) != 1 and a[k] != 0):
            return False
    if n == 0 and gp == 0:
        nonzero = [k + 1 for k in range(N - 1) if d[k] != 0]
        if reduce(gcd, nonzero, N) != 1:
            return False
    return True


def codes(y):
    return {v.code for v in validate(y)}


def test_validate_examples():
    assert validate(Y(3, 0, 0, 2, [8], [0])) == []
    assert codes(Y(1, 1, 0, 3, [2, 1], [1, 0])) == {E_FAN}
    assert E_STABILITY in codes(Y(1, 0, 0, 2, [4], [0]))


def test_validate_reports_every_violation():
    # wrong genus, bad fan, marks over a non-coprime type
    found = codes(Y(5, 1, 0, 4, [1, 1, 0], [0, 1, 0]))
    assert {E_RH, E_FAN, E_MARKS} <= found


def test_validate_connectivity():
    # N=4, only type-2 points: the cover splits
    y = Y(1, 0, 0, 4, [0, 4, 0], [0, 0, 0])
    assert E_CONNECT in codes(y)


@pytest.mark.parametrize(
    "y",
    [
        Y(3, 0, 0, 2, [8, 0], [0, 0]),
        Y(3, 0, 0, 2, [-8], [0]),
        Y(3, 0, 0, 1, [], []),
        Y(-1, 0, 0, 2, [0], [0]),
    ],
)
def test_validate_shape(y):
    assert codes(y) == {E_SHAPE}


@pytest.mark.parametrize(
    "gp, N, d, expected",
    [(0, 2, [6], 2), (1, 3, [0, 0], 1), (0, 4, [1, 0, 1], 0), (0, 4, [1, 1, 0], None)],
)
def test_total_genus(gp, N, d, expected):
    assert total_genus(gp, N, d) == expected


def test_total_genus_shape():
    with pytest.raises(ValueError):
        total_genus(0, 3, [1])


@pytest.mark.parametrize(
    "y, expected",
    [
        (Y(3, 0, 0, 2, [8], [0]), 1),
        (Y(1, 1, 0, 2, [4], [1]), 0),
        (Y(3, 0, 0, 3, [4, 1], [0, 0]), 4),
    ],
)
def test_codimension(y, expected):
    assert codimension(y) == expected


def test_codimension_needs_valid():
    with pytest.raises(InvalidDatumError) as info:
        codimension(Y(1, 1, 0, 3, [2, 1], [1, 0]))
    assert info.value.code == "E_INVALID"


def test_twin_examples():
    assert twin(Y(3, 0, 0, 2, [8], [0])) == Y(3, 0, 0, 2, [8], [0])
    assert twin(Y(1, 1, 0, 3, [3, 0], [1, 0])) == Y(1, 1, 0, 3, [0, 3], [0, 1])


def test_is_hyperelliptic():
    assert is_hyperelliptic(Y(3, 0, 0, 2, [8], [0]))
    assert is_hyperelliptic(Y(1, 1, 0, 2, [4], [1]))
    assert not is_hyperelliptic(Y(3, 0, 0, 3, [4, 1], [0, 0]))
    assert hyperelliptic_datum(3, 0) == Y(3, 0, 0, 2, [8], [0])


@pytest.mark.parametrize(
    "y, expected",
    [(Y(3, 0, 0, 2, [8], [0]), 5), (Y(1, 1, 0, 2, [4], [1]), 1), (Y(3, 0, 1, 2, [4], [0]), 4)],
)
def test_sector_dimension(y, expected):
    assert sector_dimension(y) == expected
    assert sector_dimension(y) + codimension(y) == 3 * y.g - 3 + y.n


def test_multiplicity():
    assert multiplicity(Y(3, 0, 0, 3, [4, 1], [0, 0])) == 1
    assert multiplicity(Y(1, 2, 0, 4, [2, 0, 2], [1, 0, 1])) == 2
    assert multiplicity(Y(2, 4, 0, 4, [2, 0, 2], [2, 0, 2])) == 6


def test_json_round_trip():
    y = Y(1, 1, 0, 3, [3, 0], [1, 0])
    assert SectorDatum.from_json(y.to_json()) == y
    assert y.to_json() == '{"g":1,"n":1,"g_prime":0,"order":3,"d":[3,0],"a":[1,0]}'


@pytest.mark.parametrize(
    "text",
    ['{"g":1}', "[1,2]", "{bad", '{"g":1,"n":1,"g_prime":0,"order":3,"d":[3,"x"],"a":[1,0]}'],
)
def test_json_rejects(text):
    with pytest.raises(ValueError):
        SectorDatum.from_json(text)


@st.composite
def raw_data(draw):
    N = draw(st.integers(2, 7))
    entries = st.lists(st.integers(0, 5), min_size=N - 1, max_size=N - 1)
    return Y(draw(st.integers(0, 6)), draw(st.integers(0, 4)), draw(st.integers(0, 2)), N,
             draw(entries), draw(entries))


@given(raw_data())
def test_validate_agrees_with_naive_checker(y):
    assert (validate(y) == []) == naive_admissible(y)


def test_validate_agrees_exhaustively_small():
    for N in (2, 3, 4, 6):
        for d in product(range(4), repeat=N - 1):
            for a in product(range(2), repeat=N - 1):
                for g, n, gp in product(range(4), range(3), range(2)):
                    y = Y(g, n, gp, N, d, a)
                    assert (validate(y) == []) == naive_admissible(y)
