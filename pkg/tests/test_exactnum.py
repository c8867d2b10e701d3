from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2n_howe.exactnum import falling_product, format_scalar, is_integer, parse_rational, scalar

rationals = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 40))


def test_scalar_canonical_form():
    assert scalar(2, 4) == Fraction(1, 2)
    s = scalar(-3, -6)
    assert (s.numerator, s.denominator) == (1, 2)
    z = scalar(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_scalar_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        scalar(1, 0)


def test_is_integer():
    assert not is_integer(Fraction(1, 2))
    assert is_integer(Fraction(-3, 1))
    assert is_integer(Fraction(0))


def test_falling_product_examples():
    assert falling_product(Fraction(5, 2), 0) == 1
    assert falling_product(Fraction(5, 2), 2) == Fraction(5, 2) * Fraction(3, 2) == Fraction(15, 4)
    assert falling_product(Fraction(1, 2), 3) == Fraction(3, 8)


def test_format_and_parse():
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("1/2") == Fraction(1, 2)
    for bad in ("", "1/0", "1.5", "a/b", "1/-2"):
        with pytest.raises(ValueError):
            parse_rational(bad)


@given(rationals)
def test_format_roundtrip(x):
    assert parse_rational(format_scalar(x)) == x


@given(rationals, rationals, rationals)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    if x != 0:
        assert x * (1 / x) == 1


@given(rationals, st.integers(0, 8), st.integers(0, 8))
def test_falling_product_splits(s, a, b):
    assert falling_product(s, a + b) == falling_product(s, a) * falling_product(s - a, b)
