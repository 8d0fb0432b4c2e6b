"""Harish-Chandra images of the Berezinian and of transfer matrices.

The Harish-Chandra image of a transfer matrix is the signed view of its
q-character. The Berezinian series is the ordered product of
``(1 - q d_i(u) tau)`` for even i and its inverse for odd i, and its ratio
decomposition is verified here coefficient by coefficient.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from skewchar.characters import A_k, S_k, compare_polys, q_character
from skewchar.core_ring import CharPoly, Monomial, kappa, symbol_sign
from skewchar.diagrams import (
    Partition,
    SkewDiagram,
    build_S,
    build_upsilon,
    build_W,
    build_xi,
    build_xi_minus,
    build_xi_plus,
)
from skewchar.exceptions import NotDivisible
from skewchar.models import CheckResult, VerificationReport
from skewchar.series import OperatorSeries, op_inv, op_mul

logger = logging.getLogger(__name__)

PolySeries = OperatorSeries[CharPoly]


def hc_transfer(d: SkewDiagram, m: int, n: int) -> CharPoly:
    return q_character(d, m, n).signed()


@lru_cache(maxsize=64)
def hc_berezinian(m: int, n: int, order: int) -> PolySeries:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    result = OperatorSeries.from_coeffs([CharPoly.one(m, n)], order, CharPoly.zero(m, n))
    for i in range(1, m + n + 1):
        factor = OperatorSeries.one_minus(CharPoly.symbol(i, 0, m, n), order)
        if i > m:
            factor = op_inv(factor)
        result = op_mul(result, factor)
    return result


def series_from(constant: CharPoly, coeffs: list[CharPoly], order: int) -> PolySeries:
    """Series ``constant + sum_k coeffs[k-1] (q tau)^k``."""
    m, n = constant.signature
    return OperatorSeries.from_coeffs([constant, *coeffs], order, CharPoly.zero(m, n))


def compare_series(name: str, lhs: PolySeries, rhs: PolySeries) -> CheckResult:
    order = min(lhs.order, rhs.order)
    for k in range(order + 1):
        check = compare_polys(name, lhs[k], rhs[k], order=k)
        if not check.passed:
            return check
    return CheckResult.ok(name, f"orders 0..{order}")


# ===== Sequence sums =====


def _sequences(k: int, m: int, n: int, *, strict_odd: bool) -> Iterator[tuple[int, ...]]:
    """Weakly increasing sequences in 1..m+n, strict on even (or on odd) letters."""
    for seq in itertools.combinations_with_replacement(range(1, m + n + 1), k):
        repeated = {a for a, b in zip(seq, seq[1:]) if a == b}
        if any((a > m) == strict_odd for a in repeated):
            continue
        yield seq


def _sequence_sum(k: int, m: int, n: int, shifts: list[int], *, strict_odd: bool) -> CharPoly:
    total = CharPoly.zero(m, n)
    for seq in _sequences(k, m, n, strict_odd=strict_odd):
        sign = 1
        for i in seq:
            sign *= symbol_sign(i, m)
        mono = Monomial.of(m, *zip(seq, shifts))
        total = total + CharPoly.from_monomial(mono, m, n, sign)
    return total


def hc_sequence_sum_I(k: int, m: int, n: int) -> CharPoly:
    """Sum over i_1 <= ... <= i_k (strict on even letters) of prod s_i d_i(u - a + 1)."""
    if k < 0:
        return CharPoly.zero(m, n)
    return _sequence_sum(k, m, n, [1 - a for a in range(1, k + 1)], strict_odd=False)


def hc_sequence_sum_J(k: int, m: int, n: int) -> CharPoly:
    """Sum over i_1 <= ... <= i_k (strict on odd letters) of prod s_i d_i(u + a - k)."""
    if k < 0:
        return CharPoly.zero(m, n)
    return _sequence_sum(k, m, n, [a - k for a in range(1, k + 1)], strict_odd=True)


def verify_berezinian_expansion(m: int, n: int, order: int, *, strict: bool = True) -> VerificationReport:
    """Match the Berezinian and its inverse with column and row characters."""
    started = time.perf_counter()
    ber = hc_berezinian(m, n, order)
    inv = op_inv(ber)
    report = VerificationReport(name="berezinian-expansion", stats={"m": m, "n": n, "order": order})
    for k in range(order + 1):
        sign = -1 if k % 2 else 1
        column = A_k(k, 0, m, n).signed() * sign
        report.add(compare_polys(f"coefficient {k} = column character", ber[k], column, order=k))
        report.add(compare_polys(f"coefficient {k} = sequence sum", ber[k], hc_sequence_sum_I(k, m, n) * sign, order=k))
        row = S_k(k, 0, m, n).signed().shift(-(k - 1)) if k else CharPoly.one(m, n)
        report.add(compare_polys(f"inverse coefficient {k} = row character", inv[k], row, order=k))
        if k:
            report.add(compare_polys(f"inverse coefficient {k} = sequence sum", inv[k], hc_sequence_sum_J(k, m, n), order=k))
    logger.info(
        "berezinian expansion done m=%d n=%d order=%d passed=%s duration_ms=%d",
        m,
        n,
        order,
        report.passed,
        int((time.perf_counter() - started) * 1000),
    )
    if strict:
        report.raise_for_status()
    return report


# ===== Ratio decomposition =====


@dataclass(frozen=True)
class HCFraction:
    """Quotient of two Harish-Chandra polynomials kept as a pair."""

    num: CharPoly
    den: CharPoly

    def exact(self) -> CharPoly:
        """Return the polynomial quotient; NotDivisible when it is not one."""
        return self.num.exquo(self.den)

    def is_polynomial(self) -> bool:
        try:
            self.exact()
        except NotDivisible:
            return False
        return True

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


@dataclass(frozen=True)
class RatioCoefficients:
    e: tuple[CharPoly, ...]
    g: tuple[CharPoly, ...]
    e_bar: tuple[HCFraction, ...]
    g_bar: tuple[HCFraction, ...]
    common_denominator: CharPoly


def _xi_plus_minus_column(i: int, m: int, n: int) -> SkewDiagram:
    return SkewDiagram(build_xi_plus(m, n).lam, Partition((1,) * (m - i)))


def _xi_minus_minus_row(i: int, m: int, n: int) -> SkewDiagram:
    return SkewDiagram(build_xi_minus(m, n).lam, Partition((n - i,)))


@lru_cache(maxsize=64)
def ratio_coefficients(m: int, n: int) -> RatioCoefficients:
    """Compute the unbarred ratios exactly and the barred ones as fractions.

    Every barred ratio shares the denominator H(Xi)(u - n).
    """
    if m < 0 or n < 0:
        raise ValueError("signature entries must be nonnegative")
    xi = hc_transfer(build_xi(m, n), m, n)
    e = tuple(
        hc_transfer(_xi_plus_minus_column(i, m, n), m, n).shift(m - i).exquo(xi.shift(m + 1 - i))
        for i in range(1, m + 1)
    )
    g = tuple(
        hc_transfer(build_upsilon("plus", i, m, n), m, n).shift(m + 1 - i).exquo(xi.shift(m + 1 - i))
        for i in range(1, n + 1)
    )
    common = xi.shift(-n)
    e_bar = tuple(
        HCFraction(hc_transfer(build_upsilon("minus", i, m, n), m, n).shift(-n), common)
        for i in range(1, m + 1)
    )
    g_bar = tuple(
        HCFraction(hc_transfer(_xi_minus_minus_row(i, m, n), m, n).shift(-n + 1), common)
        for i in range(1, n + 1)
    )
    return RatioCoefficients(e, g, e_bar, g_bar, common)


def _alternating(values: tuple[CharPoly, ...]) -> list[CharPoly]:
    return [v * (-1 if k % 2 else 1) for k, v in enumerate(values, start=1)]


def _recursion_rhs(j: int, g: tuple[CharPoly, ...], m: int, n: int) -> CharPoly:
    """T^j + sum_a (-1)^a T^{j-a}(u) G_a(u - j + a)."""
    total = A_k(j, 0, m, n).signed()
    for a in range(1, min(j, n) + 1):
        term = A_k(j - a, 0, m, n).signed() * g[a - 1].shift(-j + a)
        total = total - term if a % 2 else total + term
    return total


def _closed_form_e(i: int, m: int, n: int) -> CharPoly:
    total = CharPoly.zero(m, n)
    for js in itertools.combinations(range(1, m + 1), i):
        mono = Monomial.of(m, *((j, 1 - a) for a, j in enumerate(js, start=1)))
        total = total + CharPoly.from_monomial(mono, m, n)
    return total


def _closed_form_g(i: int, m: int, n: int) -> CharPoly:
    total = CharPoly.zero(m, n)
    for js in itertools.combinations(range(1, n + 1), i):
        mono = Monomial.of(m, *((m + j, a - i) for a, j in enumerate(js, start=1)))
        total = total + CharPoly.from_monomial(mono, m, n)
    return total * (-1 if i % 2 else 1)


def verify_ratio(m: int, n: int, order: int, *, strict: bool = True) -> VerificationReport:
    """Check both ratio decompositions of the Berezinian and the recursions behind them."""
    started = time.perf_counter()
    one = CharPoly.one(m, n)
    ber = hc_berezinian(m, n, order)
    coeffs = ratio_coefficients(m, n)
    report = VerificationReport(
        name="ratio",
        stats={"m": m, "n": n, "order": order, "e": len(coeffs.e), "g": len(coeffs.g)},
    )

    g_series = series_from(one, list(coeffs.g), order)
    e_series = series_from(one, _alternating(coeffs.e), order)
    report.add(compare_series("Ber * G = E", op_mul(ber, g_series), e_series))

    common = coeffs.common_denominator
    g_bar_series = series_from(common, [f.num for f in coeffs.g_bar], order)
    e_bar_series = series_from(common, _alternating(tuple(f.num for f in coeffs.e_bar)), order)
    report.add(compare_series("Gbar * Ber = Ebar (cleared)", op_mul(g_bar_series, ber), e_bar_series))

    for i in range(1, m + 1):
        report.add(compare_polys(f"E_{i} recursion", coeffs.e[i - 1], _recursion_rhs(i, coeffs.g, m, n)))
        report.add(compare_polys(f"E_{i} closed form", coeffs.e[i - 1], _closed_form_e(i, m, n)))
    for j in range(m + 1, order + 1):
        report.add(compare_polys(f"recursion vanishes at {j}", _recursion_rhs(j, coeffs.g, m, n), one * 0))
    for i in range(1, n + 1):
        report.add(compare_polys(f"G_{i} closed form", coeffs.g[i - 1], _closed_form_g(i, m, n)))

    for k in range(1, order - m - n + 1):
        shape = SkewDiagram(Partition((n + 1,) * (m + k)), Partition((n,) * (k - 1)))
        report.add(compare_polys(f"rectangle shape vanishes k={k}", hc_transfer(shape, m, n), one * 0))

    report.add(_check_recognitions(m, n))

    logger.info(
        "ratio verify done m=%d n=%d order=%d passed=%s duration_ms=%d",
        m,
        n,
        order,
        report.passed,
        int((time.perf_counter() - started) * 1000),
    )
    if strict:
        report.raise_for_status()
    return report


def _check_recognitions(m: int, n: int) -> CheckResult:
    """Numerators of E_i and G_i are the W((1^i)) and S((i)) shapes box for box."""
    for i in range(1, m + 1):
        w = build_W(Partition((1,) * i), m, n)
        if w.content_map() != _xi_plus_minus_column(i, m, n).shifted(-1).content_map():
            return CheckResult.failed("numerator shapes", f"E_{i} numerator is not W((1^{i}))")
    for i in range(1, n + 1):
        if build_S(Partition((i,)), m, n).content_map() != build_upsilon("plus", i, m, n).content_map():
            return CheckResult.failed("numerator shapes", f"G_{i} numerator is not S(({i}))")
    return CheckResult.ok("numerator shapes")


# ===== Center =====


def center_series(m: int, n: int) -> tuple[CharPoly, CharPoly]:
    """Return the even and odd products of d_i(u - kappa_i) in the central series."""
    even = CharPoly.one(m, n)
    odd = CharPoly.one(m, n)
    for i in range(1, m + n + 1):
        factor = CharPoly.symbol(i, -kappa(i, m), m, n)
        if i <= m:
            even = even * factor
        else:
            odd = odd * factor
    return even, odd


def verify_center_ratio(m: int, n: int, *, strict: bool = True) -> VerificationReport:
    """Cross-multiplied form of z(u) = (-1)^n T_{Xi+}(u) / T_{Xi-}(u + 1)."""
    even, odd = center_series(m, n)
    lhs = even * hc_transfer(build_xi_minus(m, n), m, n).shift(1)
    rhs = odd * hc_transfer(build_xi_plus(m, n), m, n) * (-1 if n % 2 else 1)
    report = VerificationReport(name="center-ratio", stats={"m": m, "n": n, "monomials": len(lhs)})
    report.add(compare_polys("center ratio", lhs, rhs))
    logger.info("center ratio done m=%d n=%d passed=%s", m, n, report.passed)
    if strict:
        report.raise_for_status()
    return report


def default_order(m: int, n: int) -> int:
    return m + n + 3
