from __future__ import annotations

import pytest
from conftest import D, char_polys
from hypothesis import given, settings
from hypothesis import strategies as st

from skewchar.characters import A_k, S_k
from skewchar.core_ring import CharPoly
from skewchar.diagrams import Partition, iter_skew_shapes
from skewchar.exceptions import IdentityMismatch, ShapeError
from skewchar.jacobi_trudi import (
    det,
    det_leibniz,
    jt_det,
    jt_matrix_A,
    jt_matrix_S,
    jt_symbols_A,
    jt_symbols_S,
    verify_jt,
)


def labels(rows):
    return [[e.label() for e in row] for row in rows]


def test_symbolic_matrix_for_432_over_11():
    assert labels(jt_symbols_S(Partition((4, 3, 2)), Partition((1, 1)))) == [
        ["S_3(u+1)", "S_4(u)", "S_6(u-2)"],
        ["S_1(u+1)", "S_2(u)", "S_4(u-2)"],
        ["0", "1", "S_2(u-2)"],
    ]


def test_two_box_column_matrices():
    lam = Partition((1, 1))
    assert labels(jt_symbols_S(lam, Partition())) == [["S_1(u)", "S_2(u-1)"], ["1", "S_1(u-1)"]]
    assert labels(jt_symbols_A(lam, Partition())) == [["A_2(u)"]]
    det_s = det(jt_matrix_S(lam, Partition(), 1, 1))
    assert det_s == S_k(1, 0, 1, 1) * S_k(1, -1, 1, 1) - S_k(2, -1, 1, 1)
    assert det_s == A_k(2, 0, 1, 1)


def test_equal_shapes_give_unit_determinant():
    lam = Partition((3, 1))
    assert det(jt_matrix_S(lam, lam, 1, 1)) == 1


def test_containment_required():
    with pytest.raises(ShapeError):
        jt_symbols_S(Partition((1,)), Partition((2,)))


def test_small_determinants():
    a, b, c, e = D(1, 0), D(2, 0), D(1, 1), D(2, -1)
    assert det([[a]]) == a
    assert det([[a, b], [c, e]]) == a * e - b * c
    assert det([], signature=(1, 1)) == 1
    with pytest.raises(ValueError):
        det([[a, b]])


@settings(max_examples=25, deadline=None)
@given(st.lists(char_polys(max_terms=2, max_degree=1), min_size=9, max_size=9))
def test_cofactor_matches_leibniz(entries):
    mat = [entries[0:3], entries[3:6], entries[6:9]]
    assert det(mat, signature=(1, 1)) == det_leibniz(mat, signature=(1, 1))


def test_block_triangular_determinant_multiplies():
    a, b, c, e = D(1, 0), D(2, 0), D(1, 1), D(2, 1)
    z = CharPoly.zero(1, 1)
    mat = [[a, b, D(1, 2)], [c, e, D(2, 2)], [z, z, a + b]]
    assert det(mat) == (a * e - b * c) * (a + b)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_symbolic_determinant_matches_cofactor_expansion(m, n):
    for d in iter_skew_shapes(4):
        shared: dict = {}
        for symbols, matrix in (
            (jt_symbols_S(d.lam, d.mu), jt_matrix_S(d.lam, d.mu, m, n)),
            (jt_symbols_A(d.lam, d.mu), jt_matrix_A(d.lam, d.mu, m, n)),
        ):
            expected = det(matrix, signature=(m, n))
            assert jt_det(symbols, m, n) == expected
            assert jt_det(symbols, m, n, minors=shared) == expected


def test_one_box_entries_share_minors():
    box = Partition((1,))
    shared: dict = {}
    det_s = jt_det(jt_symbols_S(box, Partition()), 1, 1, minors=shared)
    det_a = jt_det(jt_symbols_A(box, Partition()), 1, 1, minors=shared)
    # S_1(u) and A_1(u) key the same minor
    assert len(shared) == 1
    assert det_s == det_a == S_k(1, 0, 1, 1)
    assert jt_det([], 1, 1) == 1


def test_432_over_11_in_gl_2_2():
    report = verify_jt(Partition((4, 3, 2)), Partition((1, 1)), 2, 2)
    assert report.passed
    assert [c.name for c in report.checks] == ["tableaux=S-determinant", "tableaux=A-determinant"]


def test_rectangle_shapes_vanish():
    report = verify_jt(Partition((2, 2)), Partition(), 1, 1)
    names = [c.name for c in report.checks]
    assert "S-determinant vanishes" in names and "A-determinant vanishes" in names
    assert report.passed
    assert verify_jt(Partition((2, 2, 2)), Partition((1,)), 1, 1).passed


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_all_small_skew_shapes(m, n):
    for d in iter_skew_shapes(5):
        assert verify_jt(d.lam, d.mu, m, n).passed


def test_failed_verification_is_reported(monkeypatch):
    import skewchar.jacobi_trudi as jt

    monkeypatch.setattr(jt, "q_character", lambda d, m, n: CharPoly.one(m, n))
    report = jt.verify_jt(Partition((1,)), Partition(), 1, 1, strict=False)
    assert not report.passed
    assert report.first_failure().counterexample is not None
    with pytest.raises(IdentityMismatch):
        report.raise_for_status()
