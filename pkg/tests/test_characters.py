from __future__ import annotations

import pytest
from conftest import D

from skewchar.characters import (
    A_k,
    S_k,
    box_product,
    central_eigenvalue,
    check_divisibility_S,
    check_divisibility_W,
    compare_polys,
    leading_monomial,
    parity_histogram,
    q_character,
    restricted_character,
    weight_of,
)
from skewchar.core_ring import CharPoly
from skewchar.diagrams import Partition, SkewDiagram, iter_hooks, iter_partitions, natural_weight
from skewchar.exceptions import IdentityMismatch, MonomialMismatch, NoUniqueLeading, ShapeError
from skewchar.ratfunc import RatFunc


def straight(*parts: int) -> SkewDiagram:
    return SkewDiagram(Partition(parts))


def test_single_box_character():
    assert q_character(straight(1), 1, 1) == D(1, 0) + D(2, 0)


def test_row_and_column_characters():
    assert q_character(straight(2), 1, 1) == D(1, 0) * D(1, 1) + D(1, 0) * D(2, 1)
    assert A_k(2, 0, 1, 1) == D(1, 0) * D(2, -1) + D(2, 0) * D(2, -1)
    assert S_k(1, 3, 1, 1) == D(1, 3) + D(2, 3)
    assert S_k(0, 0, 1, 1) == 1
    assert S_k(-1, 0, 1, 1) == 0


def test_restricted_character_uses_entry_range():
    assert restricted_character(straight(2), 1, 1, (1, 1)) == D(1, 0) * D(1, 1)
    assert restricted_character(straight(2), 1, 1, (2, 2)) == 0


def test_anchor_shifts_contents():
    shifted = SkewDiagram(Partition((1,)), Partition(), -2)
    assert q_character(shifted, 1, 1) == q_character(straight(1), 1, 1).shift(2)


def test_divisibility_quotients_by_hand():
    assert check_divisibility_W(Partition((1,)), 1, 1) == D(1, -1)
    assert check_divisibility_S(Partition((1,)), 1, 1) == D(2, -1)
    with pytest.raises(ShapeError):
        check_divisibility_W(Partition((1, 1)), 1, 1)
    with pytest.raises(ShapeError):
        check_divisibility_S(Partition((2,)), 1, 1)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_divisibility_grid(m, n):
    for size in range(4):
        for p in iter_partitions(size):
            if p.length <= m:
                assert check_divisibility_W(p, m, n)
            if p.part(1) <= n:
                assert check_divisibility_S(p, m, n)


def test_box_product():
    assert box_product(straight(1)) == RatFunc.linear(1) / RatFunc.linear(0)
    # contents 0 and 1 telescope
    assert box_product(straight(2)) == RatFunc.linear(2) / RatFunc.linear(0)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_central_eigenvalue_on_hooks(m, n):
    for lam in iter_hooks(4, m, n):
        d = SkewDiagram(lam)
        assert central_eigenvalue(q_character(d, m, n), d) == box_product(d)


def test_central_eigenvalue_reports_bad_monomial():
    d = straight(1)
    with pytest.raises(MonomialMismatch) as info:
        central_eigenvalue(D(1, 0) + D(1, 5), d)
    assert info.value.monomial is not None


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_leading_weight_is_natural_weight(m, n):
    for lam in iter_hooks(4, m, n):
        lead = leading_monomial(q_character(SkewDiagram(lam), m, n))
        assert weight_of(lead, m, n) == natural_weight(lam, m, n)


def test_leading_monomial_errors():
    with pytest.raises(NoUniqueLeading):
        leading_monomial(D(1, 0) + D(1, 1))
    with pytest.raises(ValueError):
        leading_monomial(CharPoly.zero(1, 1))


def test_parity_histogram():
    assert parity_histogram(q_character(straight(1), 1, 1)) == {0: 1, 1: 1}
    assert parity_histogram(A_k(2, 0, 1, 1)) == {0: 1, 1: 1}


def test_compare_polys_reports_counterexample():
    ok = compare_polys("same", D(1, 0), D(1, 0))
    assert ok.passed
    bad = compare_polys("different", D(1, 0) + D(2, 0), D(1, 0), order=3)
    assert not bad.passed
    assert bad.order == 3
    assert bad.counterexample == "+1 * d[2;0]"


def test_divide_and_compare_raises_identity_mismatch(monkeypatch):
    import skewchar.characters as characters

    monkeypatch.setattr(characters, "restricted_character", lambda *args, **kwargs: D(1, 7))
    with pytest.raises(IdentityMismatch, match="divisibility-W"):
        characters.check_divisibility_W(Partition((1,)), 1, 1)
