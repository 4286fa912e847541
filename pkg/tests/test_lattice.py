from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from singforge.errors import UsageError
from singforge.lattice import Weight, fmt_rat, gcd_of, lcm_of, pairing, parse_rat, primitive


def test_gcd_lcm():
    assert gcd_of([12, 18, 30]) == 6
    assert lcm_of([2, 3, 7, 41]) == 1722
    with pytest.raises(UsageError):
        gcd_of([])
    with pytest.raises(UsageError):
        lcm_of([2, 0])


def test_pairing_dimension():
    assert pairing((1, 2, 3), (4, 5, 6)) == 32
    with pytest.raises(UsageError):
        pairing((1, 2), (1, 2, 3))


def test_rational_text():
    assert fmt_rat(Fraction(860, 861)) == "860/861"
    assert fmt_rat(3) == "3/1"
    assert parse_rat("-2/7") == Fraction(-2, 7)
    with pytest.raises(UsageError):
        parse_rat("1/0")
    with pytest.raises(UsageError):
        parse_rat("half")


@pytest.mark.parametrize("bad", [(), (0, 1), (2, 4), (-1, 3)])
def test_weight_rejects(bad):
    with pytest.raises(UsageError):
        Weight(bad)


def test_weight_is_tuple():
    w = Weight([15, 10, 6])
    assert w == (15, 10, 6) and hash(w) == hash((15, 10, 6))


@given(st.lists(st.integers(0, 200), min_size=1, max_size=6))
def test_primitive(v):
    p = primitive(v)
    if any(v):
        assert gcd_of(p) == 1
        k = gcd_of(v)
        assert tuple(x * k for x in p) == tuple(v)
    else:
        assert p == tuple(v)


@given(st.fractions())
def test_fmt_parse_roundtrip(x):
    assert parse_rat(fmt_rat(x)) == x
