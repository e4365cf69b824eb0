from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hodgekit.gaussian import ONE, ZERO, GaussianRational, I, as_gaussian, parse_fraction

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)


def to_sympy(g):
    return sympy.Rational(g.re.numerator, g.re.denominator) + sympy.I * sympy.Rational(g.im.numerator, g.im.denominator)


def test_i_squared():
    assert I * I == -ONE
    assert I ** 4 == ONE
    assert I ** -1 == -I


def test_parse_fraction_forms():
    assert parse_fraction("3/4") == Fraction(3, 4)
    assert parse_fraction(" -2 ") == -2
    assert parse_fraction(Fraction(1, 3)) == Fraction(1, 3)
    assert parse_fraction(sympy.Rational(5, 7)) == Fraction(5, 7)
    with pytest.raises(ZeroDivisionError):
        parse_fraction("1/0")
    with pytest.raises(TypeError):
        parse_fraction(0.5)


def test_json_round_trip_literal():
    g = GaussianRational(Fraction(-1, 2), 3)
    assert g.to_json() == {"re": "-1/2", "im": "3/1"}
    assert GaussianRational.from_json(g.to_json()) == g


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.re = 2


def test_mixes_with_sympy():
    x = sympy.Symbol("x")
    assert sympy.expand((GaussianRational(1, 1) * x) - (1 + sympy.I) * x) == 0
    assert GaussianRational(2) * sympy.Integer(3) == 6


def test_str_forms():
    assert str(GaussianRational(0, 2)) == "2i"
    assert str(GaussianRational(1, -1)) == "(1-1i)"
    assert str(ZERO) == "0"


@given(gaussians, gaussians)
def test_field_ops_match_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    if not b.is_zero():
        assert sympy.expand(to_sympy(a / b) * to_sympy(b)) == to_sympy(a)


@given(gaussians)
def test_conjugate_and_norm(a):
    assert a * a.conjugate() == a.norm()
    assert a.conjugate().conjugate() == a
    if not a.is_zero():
        assert a * a.inverse() == ONE


@given(gaussians)
def test_json_round_trip(a):
    assert GaussianRational.from_json(a.to_json()) == a


@given(rationals)
def test_real_values_hash_like_fractions(q):
    assert hash(GaussianRational(q)) == hash(q)
    assert as_gaussian(q) == q
