from __future__ import annotations

import pytest
from conftest import D

from skewchar.core_ring import CharPoly
from skewchar.diffops import (
    compare_series,
    hc_berezinian,
    hc_sequence_sum_I,
    hc_sequence_sum_J,
    ratio_coefficients,
    series_from,
    verify_berezinian_expansion,
    verify_center_ratio,
    verify_ratio,
)

SIGNATURES = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]


def test_berezinian_for_gl_1_1():
    ber = hc_berezinian(1, 1, 2)
    assert ber[0] == 1
    assert ber[1] == D(2, 0) - D(1, 0)
    with pytest.raises(ValueError):
        hc_berezinian(1, 1, 0)


def test_sequence_sums_small():
    assert hc_sequence_sum_I(1, 1, 1) == D(1, 0) - D(2, 0)
    assert hc_sequence_sum_J(1, 1, 1) == D(1, 0) - D(2, 0)
    assert hc_sequence_sum_I(-1, 1, 1) == 0


@pytest.mark.parametrize("m,n", SIGNATURES)
def test_berezinian_expansion(m, n):
    report = verify_berezinian_expansion(m, n, 3)
    assert report.passed
    assert report.stats["order"] == 3


def test_ratio_coefficients_for_gl_1_1():
    coeffs = ratio_coefficients(1, 1)
    assert coeffs.e == (D(1, 0),)
    assert coeffs.g == (-D(2, 0),)
    assert len(coeffs.e_bar) == 1 and len(coeffs.g_bar) == 1
    assert not coeffs.g_bar[0].is_polynomial()
    with pytest.raises(ValueError):
        ratio_coefficients(-1, 1)


@pytest.mark.parametrize("m,n", SIGNATURES)
def test_ratio_decomposition(m, n):
    report = verify_ratio(m, n, m + n + 3)
    assert report.passed
    names = [c.name for c in report.checks]
    assert "Ber * G = E" in names
    assert "numerator shapes" in names


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_center_ratio(m, n):
    assert verify_center_ratio(m, n).passed


def test_compare_series_reports_first_bad_order():
    one = CharPoly.one(1, 1)
    lhs = series_from(one, [D(1, 0), D(2, 0)], 2)
    rhs = series_from(one, [D(1, 0), D(1, 0)], 2)
    assert compare_series("same", lhs, lhs).passed
    check = compare_series("differs", lhs, rhs)
    assert not check.passed
    assert check.order == 2
