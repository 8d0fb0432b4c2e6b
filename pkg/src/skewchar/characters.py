"""q-characters of skew representations and the checks built on them."""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from skewchar.core_ring import CharPoly, DSymbol, Monomial, eval_lweight, kappa, symbol_sign
from skewchar.diagrams import (
    GlWeight,
    Partition,
    SkewDiagram,
    build_S,
    build_W,
    build_xi,
    rotate180,
)
from skewchar.exceptions import IdentityMismatch, MonomialMismatch, NoUniqueLeading, ShapeError
from skewchar.models import CheckResult, VerificationReport
from skewchar.ratfunc import RatFunc
from skewchar.tableaux import EntryRange, column_transfer

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def restricted_character(
    d: SkewDiagram, m: int, n: int, entries: Optional[EntryRange] = None
) -> CharPoly:
    """Tableau sum of d with entries limited to the given range."""
    one = CharPoly.one(m, n)

    def column_value(j: int, top: int, column: tuple[int, ...]) -> CharPoly:
        counts: dict[DSymbol, int] = {}
        for k, v in enumerate(column):
            s = DSymbol(v, d.content((top + k, j + 1)))
            counts[s] = counts.get(s, 0) + 1
        return CharPoly.from_monomial(Monomial.build(counts, m), m, n)

    return column_transfer(d, m, n, one, column_value, entries)


def q_character(d: SkewDiagram, m: int, n: int) -> CharPoly:
    return restricted_character(d, m, n, None)


def S_k(k: int, shift: Union[int, Fraction], m: int, n: int) -> CharPoly:
    """Character of the one-row diagram (k) with contents shifted by ``shift``."""
    if k < 0:
        return CharPoly.zero(m, n)
    return q_character(SkewDiagram.straight((k,)), m, n).shift(shift)


def A_k(k: int, shift: Union[int, Fraction], m: int, n: int) -> CharPoly:
    """Character of the one-column diagram (1^k) with contents shifted by ``shift``."""
    if k < 0:
        return CharPoly.zero(m, n)
    return q_character(SkewDiagram.straight((1,) * k), m, n).shift(shift)


def compare_polys(name: str, lhs: CharPoly, rhs: CharPoly, *, order: Optional[int] = None) -> CheckResult:
    """Compare two polynomials; on failure report the leading monomial of lhs - rhs."""
    diff = lhs - rhs
    if not diff:
        return CheckResult.ok(name, f"{len(lhs)} monomials")
    mono, coeff = diff.leading_term()
    return CheckResult.failed(
        name,
        f"sides differ in {len(diff)} monomials",
        order=order,
        counterexample=mono.to_text(coeff),
    )


# ===== Divisibility =====


def _divide_and_compare(kind: str, diagram: SkewDiagram, rest: CharPoly, m: int, n: int) -> CharPoly:
    full = q_character(diagram, m, n)
    xi = q_character(build_xi(m, n), m, n)
    quotient = full.exquo(xi)
    check = compare_polys("quotient", quotient, rest)
    if not check.passed:
        raise IdentityMismatch(VerificationReport.single(f"divisibility-{kind}", check))
    return quotient


def check_divisibility_W(lam: Partition, m: int, n: int) -> CharPoly:
    """Divide the W(lam) character by the rectangle and match the rotated gl(m|0) part."""
    if lam.length > m:
        raise ShapeError(f"{lam} has more than {m} rows")
    rotated = restricted_character(rotate180(lam), m, n, (1, m)).shift(-m)
    return _divide_and_compare("W", build_W(lam, m, n), rotated, m, n)


def check_divisibility_S(mu: Partition, m: int, n: int) -> CharPoly:
    """Divide the S(mu) character by the rectangle and match the gl(0|n) part."""
    if mu.part(1) > n:
        raise ShapeError(f"{mu} has a part larger than {n}")
    odd_part = restricted_character(SkewDiagram.straight(mu), m, n, (m + 1, m + n)).shift(-m)
    return _divide_and_compare("S", build_S(mu, m, n), odd_part, m, n)


# ===== Central eigenvalue =====


def box_product(d: SkewDiagram) -> RatFunc:
    value = RatFunc.one()
    for c in d.contents():
        value = value * RatFunc.linear(c + 1) / RatFunc.linear(c)
    return value


def central_eigenvalue(p: CharPoly, d: SkewDiagram) -> RatFunc:
    """Evaluate the central series on every monomial and return the common value."""
    m, n = p.signature
    expected = box_product(d)
    for mono, _ in p.sorted_terms():
        zeta = eval_lweight(mono, m, n)
        value = RatFunc.one()
        for j, component in enumerate(zeta, start=1):
            value = value * component.shift(-kappa(j, m)) ** symbol_sign(j, m)
        if value != expected:
            raise MonomialMismatch(
                f"monomial {mono.to_text(1)} gives {value}, expected {expected}", monomial=mono
            )
    return expected


# ===== Weights =====


def weight_of(mono: Monomial, m: int, n: int) -> GlWeight:
    coords = [0] * (m + n)
    for s, e in mono.factors:
        coords[s.index - 1] += e
    return GlWeight(tuple(coords))


def leading_monomial(p: CharPoly) -> Monomial:
    """Return the unique monomial whose weight dominates all others."""
    if not p:
        raise ValueError("zero polynomial has no leading monomial")
    m, n = p.signature
    weighted = [(mono, weight_of(mono, m, n)) for mono in p]
    top = [
        mono
        for mono, w in weighted
        if all(w.dominates(other) for _, other in weighted)
    ]
    if len(top) != 1:
        raise NoUniqueLeading(f"{len(top)} monomials attain the maximal weight")
    return top[0]


def parity_histogram(p: CharPoly) -> dict[int, int]:
    hist = {0: 0, 1: 0}
    for mono in p:
        hist[mono.parity] += 1
    return hist
