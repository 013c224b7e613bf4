from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alttangles.asymptotics import QuadraticSurd, exact_decimal, quadratic_roots, squarefree_split


def test_squarefree_split():
    assert squarefree_split(72) == (6, 2)
    assert squarefree_split(21001) == (1, 21001)


def test_quadratic_roots_rational():
    assert quadratic_roots(1, -3, 2) == [1, 2]


def test_quadratic_roots_surd():
    lo, hi = quadratic_roots(135, 101, -20)
    assert hi == QuadraticSurd(-101, 1, 21001, 270)
    assert lo < 0 < hi


def test_inverse_rationalizes():
    x = QuadraticSurd(-101, 1, 21001, 270)
    assert x.inverse() == QuadraticSurd(101, 1, 21001, 40)
    assert x * x.inverse() == 1


def test_decimal_twelve_digits_by_isqrt():
    # independent: floor(sqrt(21001 * 10^24)) then round (101 + s)/40
    s = isqrt(21001 * 10**26)
    scaled = (101 * 10**13 + s) // 40
    want = (scaled + 5) // 10
    text = f"{want // 10**12}.{want % 10**12:012d}"
    assert QuadraticSurd(101, 1, 21001, 40).decimal(12) == text


def test_exact_decimal_terminating():
    assert exact_decimal(Fraction(27, 4)) == "6.75"
    assert exact_decimal(Fraction(4, 27)) == "0.148148"
    assert exact_decimal(Fraction(-1, 8), 2) == "-0.13"


def test_str():
    assert str(QuadraticSurd(-101, 1, 21001, 270)) == "(-101+sqrt(21001))/270"
    assert str(QuadraticSurd.rational(Fraction(4, 27))) == "4/27"


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        QuadraticSurd(0, 1, 2) + QuadraticSurd(0, 1, 3)


@settings(max_examples=300, deadline=None)
@given(
    st.integers(-50, 50),
    st.integers(-20, 20),
    st.integers(2, 500),
    st.integers(1, 60),
    st.integers(0, 15),
)
def test_decimal_is_correctly_rounded(p, q, d, r, digits):
    x = QuadraticSurd(p, q, d, r)
    n = int(x.decimal(digits).replace(".", ""))
    # exact comparison: within half a unit in the last place
    lo, hi = Fraction(2 * n - 1, 2 * 10**digits), Fraction(2 * n + 1, 2 * 10**digits)
    assert lo <= x <= hi
