from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from skewchar.core_ring import CharPoly, Monomial
from skewchar.diagrams import Partition, SkewDiagram

SIG = (1, 1)


def D(i: int, c, m: int = 1, n: int = 1) -> CharPoly:
    return CharPoly.symbol(i, Fraction(c), m, n)


@pytest.fixture
def d():
    """Symbol factory for the (1|1) ring."""
    return D


@st.composite
def char_polys(draw, m: int = 1, n: int = 1, max_terms: int = 4, max_degree: int = 2):
    terms: dict[Monomial, int] = {}
    for _ in range(draw(st.integers(0, max_terms))):
        symbols = draw(
            st.lists(
                st.tuples(st.integers(1, m + n), st.integers(-2, 2)),
                max_size=max_degree,
            )
        )
        mono = Monomial.of(m, *symbols)
        terms[mono] = terms.get(mono, 0) + draw(st.integers(-3, 3))
    return CharPoly(m, n, terms)


@st.composite
def partitions(draw, max_size: int = 6, max_len: int = 3):
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_len))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_size:
        parts.pop()
    return Partition(tuple(parts))


@st.composite
def skew_diagrams(draw, max_size: int = 5):
    lam = draw(partitions(max_size=max_size))
    mu_parts = tuple(draw(st.integers(0, p)) for p in lam.parts)
    mu = Partition(tuple(sorted(mu_parts, reverse=True)))
    if not lam.contains(mu):
        mu = Partition()
    return SkewDiagram(lam, mu)


SMALL_SHAPES = [
    SkewDiagram(Partition((1,))),
    SkewDiagram(Partition((2,))),
    SkewDiagram(Partition((1, 1))),
    SkewDiagram(Partition((2, 1))),
    SkewDiagram(Partition((2, 1)), Partition((1,))),
    SkewDiagram(Partition((3, 2)), Partition((1,))),
    SkewDiagram(Partition((2, 2))),
]
