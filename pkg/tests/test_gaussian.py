from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from entsub.gaussian import ONE, ZERO, GaussianRational, format_rational, parse_rational

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


def test_parse_and_format_rationals():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(0)) == "0/1"
    assert format_rational(Fraction(-2, 6)) == "-1/3"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_rational("one half")


def test_basic_arithmetic():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert (1 + i) * (1 - i) == 2
    assert (3 + 4 * i).abs2() == 25
    assert ONE / (1 + i) == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert not ZERO and ONE


def test_real_values_hash_like_their_real_part():
    assert hash(GaussianRational(5)) == hash(Fraction(5))
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_complex_input_is_refused():
    with pytest.raises(TypeError):
        GaussianRational.coerce(1 + 2j)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_abs2_matches_conjugate_product(a):
    assert a * a.conjugate() == a.abs2()
    assert abs(complex(a)) ** 2 == pytest.approx(float(a.abs2()))


def test_integer_powers():
    i = GaussianRational(0, 1)
    assert [i**k for k in range(5)] == [1, i, -1, -i, 1]
    assert GaussianRational(2) ** -2 == Fraction(1, 4)
