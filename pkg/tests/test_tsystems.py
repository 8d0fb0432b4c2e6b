from __future__ import annotations

import itertools

import pytest

from skewchar.diagrams import Partition, SkewDiagram
from skewchar.exceptions import ShapeError, TooFewColumns
from skewchar.tsystems import (
    classical_T,
    iter_nonprime_diagrams,
    iter_prime_diagrams,
    verify_classical_tsystem,
    verify_extended_tsystem,
    verify_nonprime_factorization,
)


def test_classical_boundaries():
    assert classical_T(-1, 2, 0, 1, 1) == 0
    assert classical_T(0, 3, 0, 1, 1) == 1
    assert classical_T(2, 0, 0, 1, 1) == 1
    # a 2 x 2 rectangle has no filling in gl(1|1)
    assert classical_T(2, 2, 0, 1, 1) == 0


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_classical_grid(m, n):
    for i, j in itertools.product(range(4), repeat=2):
        if (i, j) == (0, 0):
            continue
        assert verify_classical_tsystem(i, j, m, n).passed


def test_classical_origin_is_excluded():
    with pytest.raises(ValueError):
        verify_classical_tsystem(0, 0, 1, 1)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2)])
def test_extended_relation_on_prime_diagrams(m, n):
    diagrams = list(iter_prime_diagrams(5))
    assert diagrams
    for d in diagrams:
        assert verify_extended_tsystem(d, m, n).passed


def test_extended_relation_on_square():
    report = verify_extended_tsystem(SkewDiagram(Partition((2, 2))), 2, 2)
    assert report.passed


def test_nonprime_factorization():
    d = SkewDiagram(Partition((2, 1)), Partition((1,)))
    assert verify_nonprime_factorization(d, 1, 1).passed
    for d in itertools.islice(iter_nonprime_diagrams(5), 10):
        assert verify_nonprime_factorization(d, 1, 1).passed


def test_nonprime_factorization_rejects_bad_shapes():
    with pytest.raises(TooFewColumns):
        verify_nonprime_factorization(SkewDiagram(Partition((1, 1))), 1, 1)
    with pytest.raises(ShapeError):
        verify_nonprime_factorization(SkewDiagram(Partition((2, 1))), 1, 1)
