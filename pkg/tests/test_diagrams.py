from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import skew_diagrams
from hypothesis import given, settings
from hypothesis import strategies as st

from skewchar.diagrams import (
    GlWeight,
    Partition,
    SkewDiagram,
    build_S,
    build_upsilon,
    build_W,
    build_xi,
    build_xi_minus,
    build_xi_plus,
    circ_weight,
    conjugate,
    contains_rectangle,
    irreducibility_condition,
    is_hook,
    is_prime,
    iter_hooks,
    iter_partitions,
    iter_skew_shapes,
    natural_weight,
    rotate180,
    tsystem_family,
)
from skewchar.exceptions import NotHook, NotPrime, ParseError, ShapeError, TooFewColumns


def test_partition_parse_and_validation():
    assert Partition.parse("5,3,3,0").parts == (5, 3, 3)
    assert Partition.parse("") == Partition()
    assert Partition.parse("0") == Partition()
    with pytest.raises(ParseError):
        Partition.parse("2,a")
    with pytest.raises(ShapeError):
        Partition.parse("2,3")
    with pytest.raises(ShapeError):
        Partition((-1,))


def test_conjugate_and_hooks():
    assert conjugate(Partition((4, 3, 2))) == Partition((3, 3, 2, 1))
    assert conjugate(conjugate(Partition((5, 1, 1)))) == Partition((5, 1, 1))
    assert is_hook(Partition((3, 1, 1)), 1, 1)
    assert not is_hook(Partition((3, 2, 2)), 1, 1)
    assert list(iter_hooks(3, 1, 1)) == [
        Partition((1,)),
        Partition((2,)),
        Partition((1, 1)),
        Partition((3,)),
        Partition((2, 1)),
        Partition((1, 1, 1)),
    ]


def test_natural_weight():
    assert natural_weight(Partition((3, 1, 1)), 1, 1) == GlWeight((3, 2))
    assert natural_weight(Partition((2, 2)), 2, 1).to_json() == ["2/1", "2/1", "0/1"]
    with pytest.raises(NotHook):
        natural_weight(Partition((2, 2)), 1, 1)


def test_circ_weight_splits_into_blocks():
    # (2,1) in gl(1|1) + gl(1|0): first row 2, first column below row 1 has 1 box
    assert circ_weight(Partition((2, 1)), 1, 1, 1, 0) == GlWeight((2, 1, 0))


def test_weight_dominance():
    assert GlWeight((1, 0)).dominates(GlWeight((0, 1)))
    assert not GlWeight((0, 1)).dominates(GlWeight((1, 0)))
    assert not GlWeight((1, 0)).dominates(GlWeight((0, 2)))
    assert GlWeight((2, 1)).label() == "2e1+e2"
    assert GlWeight.zero(2).label() == "0"


def test_skew_diagram_geometry():
    d = SkewDiagram(Partition((4, 3, 2)), Partition((1, 1)))
    assert d.size == 7
    assert d.boxes()[0] == (1, 2)
    assert d.content((1, 2)) == 1
    assert d.column_ranges() == [(3, 3), (1, 3), (1, 2), (1, 1)]
    assert d.shifted(Fraction(1, 2)).content((1, 2)) == Fraction(3, 2)
    assert str(d) == "4,3,2/1,1"
    with pytest.raises(ShapeError):
        SkewDiagram(Partition((1,)), Partition((2,)))


def test_from_boxes_keeps_contents():
    d = SkewDiagram.from_boxes([(2, 3), (2, 4), (3, 3)])
    assert d.lam == Partition((2, 1))
    assert d.contents() == [1, 2, 0]
    with pytest.raises(ShapeError):
        SkewDiagram.from_boxes([(1, 1), (1, 3)])
    assert SkewDiagram.from_boxes([]).is_empty


@settings(max_examples=50, deadline=None)
@given(skew_diagrams())
def test_normalized_preserves_content_multiset(d):
    if d.is_empty:
        return
    norm = d.normalized()
    assert sorted(norm.contents()) == sorted(d.contents())
    assert norm.size == d.size


def test_rotate180():
    d = rotate180(Partition((2, 1)))
    assert d.lam == Partition((2, 2))
    assert d.mu == Partition((1,))
    assert d.content((2, 2)) == 0
    assert sorted(d.contents()) == [-1, 0, 1]


def test_rectangles_and_builders():
    assert build_xi(2, 3).size == 6
    assert build_xi_plus(2, 3).lam == Partition((4, 4))
    assert build_xi_minus(2, 3).lam == Partition((3, 3, 3))
    w = build_W(Partition((1,)), 1, 1)
    assert w.contents() == [-1, 0]
    s = build_S(Partition((1,)), 1, 1)
    assert s.contents() == [0, -1]
    assert build_upsilon("plus", 0, 2, 2) == build_xi(2, 2)
    assert build_upsilon("minus", 2, 2, 2).lam == build_xi_plus(2, 2).lam
    with pytest.raises(ShapeError):
        build_W(Partition((1, 1)), 1, 1)
    with pytest.raises(ShapeError):
        build_S(Partition((2,)), 1, 1)
    with pytest.raises(ShapeError):
        build_upsilon("plus", 3, 1, 2)


def test_contains_rectangle():
    assert contains_rectangle(SkewDiagram(Partition((2, 2))), 2, 2)
    assert not contains_rectangle(SkewDiagram(Partition((2, 1))), 2, 2)
    assert not contains_rectangle(SkewDiagram(Partition((3, 3)), Partition((2,))), 2, 2)
    assert contains_rectangle(SkewDiagram(Partition((3, 3, 1)), Partition((1,))), 2, 2)


def boxed_block(d: SkewDiagram, rows: int, cols: int) -> bool:
    cells = set(d.boxes())
    return any(
        all((i + a, j + b) in cells for a in range(rows) for b in range(cols)) for i, j in cells
    )


@pytest.mark.parametrize("rows,cols", [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_contains_rectangle_matches_box_search_on_all_small_shapes(rows, cols):
    for d in iter_skew_shapes(8):
        assert contains_rectangle(d, rows, cols) == boxed_block(d, rows, cols), str(d)


@settings(max_examples=200, deadline=None)
@given(skew_diagrams(max_size=9), st.integers(1, 4), st.integers(1, 4))
def test_contains_rectangle_matches_box_search(d, rows, cols):
    assert contains_rectangle(d, rows, cols) == boxed_block(d, rows, cols)


def test_conjugate_of_hooked_shape():
    assert conjugate(Partition((5, 3, 3, 3, 3))) == Partition((5, 5, 5, 1, 1))


def test_builders_on_a_four_three_signature():
    w = build_W(Partition((2, 1, 1)), 4, 3)
    s = build_S(Partition((3, 2, 2)), 4, 3)
    assert w.size == 16 and s.size == 19
    assert contains_rectangle(w, 4, 3) and contains_rectangle(s, 4, 3)
    assert not contains_rectangle(w, 4, 4) and not contains_rectangle(s, 6, 3)
    assert w.lam == Partition((5, 5, 5, 5)) and w.mu == Partition((2, 1, 1))
    assert s.lam == Partition((3, 3, 3, 3, 3, 2, 2))


def test_prime_pictures():
    assert is_prime(SkewDiagram(Partition((2, 2, 1)), Partition((1,))))
    # the top box touches the column below it at one corner
    assert not is_prime(SkewDiagram(Partition((2, 1, 1)), Partition((1,))))
    # the two parts are disconnected
    assert not is_prime(SkewDiagram(Partition((2, 1, 1)), Partition((1, 1))))


def test_prime_diagrams():
    assert is_prime(SkewDiagram(Partition((2, 1))))
    assert is_prime(SkewDiagram(Partition((2, 2)), Partition((1,))))
    assert not is_prime(SkewDiagram(Partition((2, 1)), Partition((1,))))
    assert not is_prime(SkewDiagram(Partition()))


def test_tsystem_family_for_square():
    family = tsystem_family(SkewDiagram(Partition((2, 2))))
    assert family.plus.size == 2 and family.minus.size == 2
    assert family.zero.is_empty
    # the plus family drops the first column, so its top box has content 1
    assert family.plus.content((1, 1)) == 1
    assert family.minus.content((1, 1)) == 0
    with pytest.raises(NotPrime):
        tsystem_family(SkewDiagram(Partition((2, 1)), Partition((1,))))
    with pytest.raises(TooFewColumns):
        tsystem_family(SkewDiagram(Partition((1, 1))))


@pytest.mark.parametrize("diff", range(-5, 6))
def test_irreducibility_for_two_rows_of_two(diff):
    two = Partition((2,))
    assert irreducibility_condition(two, two, diff, 0) == (abs(diff) not in (1, 2))


def test_irreducibility_non_integer_difference():
    assert irreducibility_condition(Partition((3, 1)), Partition((2,)), Fraction(1, 3), 0)


def test_enumerations():
    assert [p.parts for p in iter_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    shapes = list(iter_skew_shapes(2))
    assert len(shapes) == len(set(shapes)) == 4
    assert all(1 <= s.size <= 2 for s in shapes)
    assert all(s.size >= 3 for s in iter_skew_shapes(4, min_boxes=3))
