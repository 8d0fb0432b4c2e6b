from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewchar.ratfunc import RatFunc

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_canonical_form_cancels_common_factors():
    # (u^2 - 1) / (2u - 2) = (u + 1) / 2
    f = RatFunc.from_coeffs([1, 0, -1], [2, -2])
    assert f == RatFunc.linear(1) * Fraction(1, 2)
    assert f.coeffs() == ([Fraction(1, 2), Fraction(1, 2)], [Fraction(1)])


def test_evaluation_and_poles():
    f = RatFunc.linear(1) / RatFunc.linear(0)
    assert f(2) == Fraction(3, 2)
    assert f.has_pole_at(0)
    assert not f.has_pole_at(-1)
    with pytest.raises(ZeroDivisionError):
        f(0)
    assert f.complex_value(2 + 0j) == pytest.approx(1.5)


def test_shift_and_powers():
    assert RatFunc.linear(0).shift(3) == RatFunc.linear(3)
    f = RatFunc.from_roots([1, 2])
    assert f.shift(Fraction(1, 2))(Fraction(1, 2)) == f(1)
    assert (f**-2) * f * f == RatFunc.one()
    assert (RatFunc.linear(0) ** 0).is_one


def test_zero_handling():
    assert RatFunc.zero().is_zero
    assert not RatFunc.zero()
    assert RatFunc.one() - 1 == RatFunc.zero()
    with pytest.raises(ZeroDivisionError):
        RatFunc.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        RatFunc.from_coeffs([1], [0])


def test_scalar_mixing():
    f = RatFunc.linear(2)
    assert 3 * f == f + f + f
    assert 1 - f == -(f - 1)
    assert 1 / f == f.inverse()
    assert str(RatFunc.one()) == "1"


@settings(max_examples=50, deadline=None)
@given(st.lists(small, max_size=3), st.lists(small, max_size=3), small)
def test_field_laws(num_roots, den_roots, w):
    f = RatFunc.from_roots(num_roots) / RatFunc.from_roots(den_roots)
    g = RatFunc.linear(w)
    assert (f * g) / g == f
    assert (f + g) - g == f
    assert (f * g).shift(w) == f.shift(w) * g.shift(w)
