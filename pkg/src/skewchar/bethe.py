"""Bethe ansatz data, equation residuals and the rational difference operator.

Given spectra zeta_1..zeta_{m+n} and Bethe roots for each i in 1..m+n-1, the
Harish-Chandra symbols are specialized by

    d_i(u) -> zeta_i(u) y_{i-1}(u + s_i) y_i(u - s_i) / (y_{i-1}(u) y_i(u))

with y_i the monic polynomial on the roots of level i and y_0 = y_{m+n} = 1.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from skewchar.core_ring import CharPoly, format_rat, parse_rat, symbol_sign
from skewchar.diffops import hc_berezinian, ratio_coefficients, series_from
from skewchar.exceptions import ParseError, PoleAtRoot
from skewchar.models import BetheInput, BetheReport, CheckResult, ResidualRow, VerificationReport
from skewchar.ratfunc import RatFunc
from skewchar.series import OperatorSeries, op_inv, op_mul

logger = logging.getLogger(__name__)

RatOperator = OperatorSeries[RatFunc]

NUMERIC_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BetheData:
    m: int
    n: int
    zeta: tuple[RatFunc, ...]
    roots: tuple[tuple[Fraction, ...], ...] = field(default=())

    def __post_init__(self) -> None:
        size = self.m + self.n
        if len(self.zeta) != size:
            raise ParseError(f"expected {size} spectra, got {len(self.zeta)}")
        roots = self.roots or tuple(() for _ in range(max(size - 1, 0)))
        if len(roots) != max(size - 1, 0):
            raise ParseError(f"expected {max(size - 1, 0)} root levels, got {len(roots)}")
        object.__setattr__(self, "roots", tuple(tuple(Fraction(t) for t in level) for level in roots))

    @classmethod
    def from_input(cls, data: BetheInput) -> "BetheData":
        zeta = tuple(
            RatFunc.from_coeffs([parse_rat(c) for c in z.num], [parse_rat(c) for c in z.den]) for z in data.zeta
        )
        roots = tuple(tuple(parse_rat(t) for t in level) for level in data.roots)
        return cls(data.m, data.n, zeta, roots)

    def sign(self, i: int) -> int:
        return symbol_sign(i, self.m)

    @cached_property
    def y(self) -> tuple[RatFunc, ...]:
        """y_0 .. y_{m+n}; the outer two are 1."""
        inner = tuple(RatFunc.from_roots(level) for level in self.roots)
        return (RatFunc.one(), *inner, RatFunc.one()) if self.m + self.n else (RatFunc.one(),)

    @cached_property
    def spectra(self) -> tuple[RatFunc, ...]:
        """Z_1 .. Z_{m+n}, the images of d_1(u) .. d_{m+n}(u)."""
        out = []
        for i in range(1, self.m + self.n + 1):
            s = self.sign(i)
            y_prev, y_here = self.y[i - 1], self.y[i]
            out.append(self.zeta[i - 1] * y_prev.shift(s) * y_here.shift(-s) / (y_prev * y_here))
        return tuple(out)


# ===== Bethe equations =====


def _factors(data: BetheData, i: int) -> list[RatFunc]:
    s_i, s_next = data.sign(i), data.sign(i + 1)
    y = data.y
    return [
        data.zeta[i - 1] / data.zeta[i],
        y[i - 1].shift(s_i) / y[i - 1],
        y[i].shift(-s_i) / y[i].shift(s_next),
        y[i + 1] / y[i + 1].shift(-s_next),
    ]


def _root(data: BetheData, i: int, j: int) -> Fraction:
    if not 1 <= i < data.m + data.n:
        raise ValueError(f"level {i} outside 1..{data.m + data.n - 1}")
    level = data.roots[i - 1]
    if not 1 <= j <= len(level):
        raise ValueError(f"level {i} has {len(level)} roots, asked for {j}")
    return level[j - 1]


def bae_residual(data: BetheData, i: int, j: int) -> Fraction:
    """Left side of the Bethe equation at root t_j^(i), minus 1."""
    t = _root(data, i, j)
    value = Fraction(1)
    for k, factor in enumerate(_factors(data, i), start=1):
        if factor.has_pole_at(t):
            raise PoleAtRoot(f"factor {k} of level {i} has a pole at t={format_rat(t)}")
        value *= factor(t)
    return value - 1


def bae_residual_numeric(
    data: BetheData, i: int, j: int, roots: Sequence[Sequence[complex]]
) -> tuple[complex, bool]:
    """Residual with complex roots, evaluated in double precision."""
    size = data.m + data.n
    if len(roots) != size - 1:
        raise ValueError(f"expected {size - 1} root levels, got {len(roots)}")
    levels = [np.asarray(level, dtype=complex) for level in roots]

    def y(level: int, z: complex) -> complex:
        if level in (0, size):
            return 1.0 + 0j
        return complex(np.prod(z - levels[level - 1]))

    t = complex(levels[i - 1][j - 1])
    s_i, s_next = data.sign(i), data.sign(i + 1)
    num = (
        data.zeta[i - 1].complex_value(t)
        * y(i - 1, t + s_i)
        * y(i, t - s_i)
        * y(i + 1, t)
    )
    den = data.zeta[i].complex_value(t) * y(i - 1, t) * y(i, t + s_next) * y(i + 1, t - s_next)
    if den == 0:
        raise PoleAtRoot(f"level {i} root {j} hits a zero denominator")
    residual = num / den - 1
    return residual, abs(residual) <= NUMERIC_TOLERANCE


# ===== Difference operator =====


def substitute_spectra(p: CharPoly, data: BetheData) -> RatFunc:
    """Apply d_i(u + c) -> Z_i(u + c) to a Harish-Chandra polynomial."""
    if p.signature != (data.m, data.n):
        raise ValueError(f"signature {p.signature} does not match data ({data.m}|{data.n})")
    shifted: dict[tuple[int, Fraction], RatFunc] = {}
    total = RatFunc.zero()
    for mono, coeff in p.sorted_terms():
        term = RatFunc.constant(coeff)
        for s, e in mono.factors:
            key = (s.index, s.shift)
            if key not in shifted:
                shifted[key] = data.spectra[s.index - 1].shift(s.shift)
            term = term * shifted[key] ** e
        total = total + term
    return total


def build_bethe_operator(data: BetheData, order: int) -> RatOperator:
    result = OperatorSeries.from_coeffs([RatFunc.one()], order, RatFunc.zero())
    for i, z in enumerate(data.spectra, start=1):
        factor = OperatorSeries.one_minus(z, order)
        if i > data.m:
            factor = op_inv(factor)
        result = op_mul(result, factor)
    return result


def build_factors(data: BetheData, order: int) -> tuple[RatOperator, RatOperator]:
    """Return D1 (even factors, left to right) and D2 (odd factors, right to left)."""
    unit = OperatorSeries.from_coeffs([RatFunc.one()], order, RatFunc.zero())
    d1, d2 = unit, unit
    for z in data.spectra[: data.m]:
        d1 = op_mul(d1, OperatorSeries.one_minus(z, order))
    for z in reversed(data.spectra[data.m :]):
        d2 = op_mul(d2, OperatorSeries.one_minus(z, order))
    return d1, d2


def _compare_rat_series(name: str, lhs: RatOperator, rhs: RatOperator) -> CheckResult:
    for k in range(min(lhs.order, rhs.order) + 1):
        if lhs[k] != rhs[k]:
            return CheckResult.failed(name, f"lhs={lhs[k]} rhs={rhs[k]}", order=k)
    return CheckResult.ok(name, f"orders 0..{min(lhs.order, rhs.order)}")


def bethe_factor_series(data: BetheData, order: int) -> tuple[RatOperator, RatOperator]:
    """Specialize 1 + sum (-1)^i E_i tau^i and 1 + sum G_j tau^j."""
    m, n = data.m, data.n
    coeffs = ratio_coefficients(m, n)
    one = CharPoly.one(m, n)
    e_series = series_from(one, [e * (-1 if i % 2 else 1) for i, e in enumerate(coeffs.e, start=1)], order)
    g_series = series_from(one, list(coeffs.g), order)
    return (
        e_series.map(lambda p: substitute_spectra(p, data)),
        g_series.map(lambda p: substitute_spectra(p, data)),
    )


def verify_bethe_operator(data: BetheData, order: int, *, strict: bool = True) -> VerificationReport:
    """Factorization D * D2 = D1 and agreement with the specialized Berezinian."""
    started = time.perf_counter()
    operator = build_bethe_operator(data, order)
    d1, d2 = build_factors(data, order)
    report = VerificationReport(name="bethe-operator", stats={"m": data.m, "n": data.n, "order": order})
    report.add(_compare_rat_series("D * D2 = D1", op_mul(operator, d2), d1))
    specialized = hc_berezinian(data.m, data.n, order).map(lambda p: substitute_spectra(p, data))
    report.add(_compare_rat_series("specialized Berezinian = D", specialized, operator))
    e_image, g_image = bethe_factor_series(data, order)
    report.add(_compare_rat_series("specialized E series = D1", e_image, d1))
    report.add(_compare_rat_series("specialized G series = D2", g_image, d2))
    logger.info(
        "bethe operator done m=%d n=%d order=%d passed=%s duration_ms=%d",
        data.m,
        data.n,
        order,
        report.passed,
        int((time.perf_counter() - started) * 1000),
    )
    if strict:
        report.raise_for_status()
    return report


def residual_table(data: BetheData) -> list[ResidualRow]:
    rows = []
    for i, level in enumerate(data.roots, start=1):
        for j, t in enumerate(level, start=1):
            try:
                rows.append(ResidualRow(i=i, j=j, root=format_rat(t), residual=format_rat(bae_residual(data, i, j))))
            except PoleAtRoot as exc:
                rows.append(ResidualRow(i=i, j=j, root=format_rat(t), error=str(exc)))
    return rows


def run_bethe(payload: BetheInput, *, strict: bool = False) -> BetheReport:
    data = BetheData.from_input(payload)
    return BetheReport(
        m=data.m,
        n=data.n,
        order=payload.order,
        residuals=residual_table(data),
        factorization=verify_bethe_operator(data, payload.order, strict=strict),
    )

