from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyclif.scalar import INV_SQRT2, ONE, SQRT2, ZERO, Scalar, format_scalar

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, rationals, rationals)


def test_constructor_and_parts():
    s = Scalar(Fraction(3, 2), Fraction(-5, 4))
    assert s.rat_part == Fraction(3, 2)
    assert s.sqrt2_part == Fraction(-5, 4)
    assert Scalar(7).rat_part == 7 and Scalar(7).sqrt2_part == 0


def test_multiplication_rule():
    # (a + b r2)(c + d r2) = (ac + 2bd) + (ad + bc) r2
    s = Scalar(1, 2) * Scalar(3, 4)
    assert s == Scalar(1 * 3 + 2 * 2 * 4, 1 * 4 + 2 * 3)
    assert SQRT2 * SQRT2 == Scalar(2)
    assert INV_SQRT2 * SQRT2 == ONE


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(scalars)
def test_inverse(s):
    if s.is_zero():
        with pytest.raises(ZeroDivisionError):
            s.inverse()
    else:
        assert s * s.inverse() == ONE
        assert (ONE / s) * s == ONE


def test_zero_iff_both_parts_zero():
    assert Scalar(0, 0).is_zero()
    assert not Scalar(0, Fraction(1, 10**9)).is_zero()
    # a^2 - 2 b^2 = 0 has no nonzero rational solutions, so every nonzero
    # element is invertible
    assert Scalar(2, 1).inverse() * Scalar(2, 1) == ONE


@given(scalars)
def test_sign_matches_float(s):
    approx = float(s.rat_part) + float(s.sqrt2_part) * 2 ** 0.5
    if abs(approx) > 1e-9:
        assert s.sign() == (1 if approx > 0 else -1)
    if s.is_zero():
        assert s.sign() == 0


@given(scalars, scalars)
def test_ordering(a, b):
    assert (a < b) == ((a - b).sign() < 0)
    assert (a <= b) == ((a - b).sign() <= 0)


def test_sign_near_zero_exact():
    # 665857/470832 is a continued-fraction convergent of sqrt(2):
    # 665857^2 - 2*470832^2 = 1, so these differ from zero by ~1e-12 and
    # float arithmetic cannot resolve them
    assert 665857**2 - 2 * 470832**2 == 1
    assert Scalar(665857, -470832).sign() == 1
    assert Scalar(-665857, 470832).sign() == -1
    assert Scalar(-665857, 470833).sign() == 1
    assert (Scalar(665857, -470832) * Scalar(665857, 470832)) == ONE


def test_pow():
    s = Scalar(1, 1)
    assert s ** 0 == ONE
    assert s ** 3 == s * s * s
    assert s ** -2 == (s * s).inverse()


def test_int_and_fraction_interop():
    assert Scalar(3) + 1 == Scalar(4)
    assert 2 * Scalar(0, 1) == SQRT2 + SQRT2
    assert Scalar(1) / 2 == Scalar(Fraction(1, 2))
    assert Scalar(3) == 3
    assert hash(Scalar(3)) == hash(Fraction(3))


def test_format():
    assert format_scalar(Scalar(0)) == "0"
    assert format_scalar(Scalar(5)) == "5"
    assert format_scalar(Scalar(Fraction(-3, 2))) == "-3/2"
    assert format_scalar(SQRT2) == "r2"
    assert format_scalar(-SQRT2) == "-r2"
    assert format_scalar(Scalar(0, Fraction(5, 4))) == "5/4 r2"
    assert format_scalar(Scalar(Fraction(3, 2), Fraction(5, 4))) == "3/2+5/4 r2"
    assert format_scalar(Scalar(Fraction(3, 2), -1)) == "3/2-r2"
    assert format_scalar(Scalar(-2, 1)) == "-2+r2"


def test_json_roundtrip():
    s = Scalar(Fraction(3, 2), Fraction(-5, 4))
    assert Scalar.from_json(s.to_json()) == s
    assert s.to_json() == {"rat": "3/2", "rat_r2": "-5/4"}


def test_immutability():
    s = Scalar(1)
    with pytest.raises(AttributeError):
        s.p = 2
