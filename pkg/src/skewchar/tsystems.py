"""Extended and classical T-system relations in the character ring."""

from __future__ import annotations

import logging
import time
from fractions import Fraction
from typing import Iterator, Union

from skewchar.characters import compare_polys, q_character
from skewchar.core_ring import CharPoly
from skewchar.diagrams import SkewDiagram, is_prime, iter_skew_shapes, tsystem_family
from skewchar.exceptions import ShapeError, TooFewColumns
from skewchar.models import VerificationReport

logger = logging.getLogger(__name__)

Shift = Union[int, Fraction]


def classical_T(i: int, j: int, shift: Shift, m: int, n: int) -> CharPoly:
    """Return T_j^(i)(u + shift), the recentered i x j rectangle character."""
    if i < 0 or j < 0 or (i > m and j > n):
        return CharPoly.zero(m, n)
    if i * j == 0:
        return CharPoly.one(m, n)
    rectangle = SkewDiagram.straight((j,) * i)
    return q_character(rectangle, m, n).shift(Fraction(shift) + Fraction(i - j + 1, 2))


def verify_classical_tsystem(i: int, j: int, m: int, n: int, *, strict: bool = True) -> VerificationReport:
    """T_j^(i)(u - 1/2) T_j^(i)(u + 1/2) = T_{j-1}^(i) T_{j+1}^(i) + T_j^(i-1) T_j^(i+1)."""
    if i == 0 and j == 0:
        raise ValueError("the relation does not hold at i = j = 0")
    half = Fraction(1, 2)
    lhs = classical_T(i, j, -half, m, n) * classical_T(i, j, half, m, n)
    rhs = classical_T(i, j - 1, 0, m, n) * classical_T(i, j + 1, 0, m, n) + classical_T(
        i - 1, j, 0, m, n
    ) * classical_T(i + 1, j, 0, m, n)
    report = VerificationReport(name="classical-tsystem", stats={"i": i, "j": j, "m": m, "n": n})
    report.add(compare_polys(f"T relation at ({i},{j})", lhs, rhs))
    if strict:
        report.raise_for_status()
    return report


def verify_extended_tsystem(d: SkewDiagram, m: int, n: int, *, strict: bool = True) -> VerificationReport:
    """K(U+) K(U-) = K(U0) K(U) + K(X) K(Y) for a prime diagram U."""
    started = time.perf_counter()
    family = tsystem_family(d)

    def k(diagram: SkewDiagram) -> CharPoly:
        return q_character(diagram, m, n)

    lhs = k(family.plus) * k(family.minus)
    rhs = k(family.zero) * k(d) + k(family.x) * k(family.y)
    report = VerificationReport(
        name="extended-tsystem",
        stats={"diagram": str(d), "m": m, "n": n, "x": str(family.x), "y": str(family.y)},
    )
    report.add(compare_polys("extended T relation", lhs, rhs))
    logger.info(
        "extended tsystem done diagram=%s m=%d n=%d passed=%s duration_ms=%d",
        d,
        m,
        n,
        report.passed,
        int((time.perf_counter() - started) * 1000),
    )
    if strict:
        report.raise_for_status()
    return report


def _has_consecutive_columns(d: SkewDiagram) -> bool:
    return all(top <= bottom for top, bottom in d.column_ranges())


def verify_nonprime_factorization(d: SkewDiagram, m: int, n: int, *, strict: bool = True) -> VerificationReport:
    """K(U+) K(U-) = K(U0) K(U) when U is not prime."""
    d = d.normalized()
    cols = d.n_columns
    if cols < 2:
        raise TooFewColumns(f"{d} has {cols} column(s); the relation needs at least 2")
    if is_prime(d):
        raise ShapeError(f"{d} is prime; use the extended relation")
    if not _has_consecutive_columns(d):
        raise ShapeError(f"{d} has an empty column")
    boxes = d.boxes()
    plus = SkewDiagram.from_boxes([b for b in boxes if b[1] >= 2], d.anchor)
    minus = SkewDiagram.from_boxes([b for b in boxes if b[1] <= cols - 1], d.anchor)
    zero = SkewDiagram.from_boxes([b for b in boxes if 2 <= b[1] <= cols - 1], d.anchor)
    lhs = q_character(plus, m, n) * q_character(minus, m, n)
    rhs = q_character(zero, m, n) * q_character(d, m, n)
    report = VerificationReport(name="nonprime-factorization", stats={"diagram": str(d), "m": m, "n": n})
    report.add(compare_polys("non-prime product", lhs, rhs))
    if strict:
        report.raise_for_status()
    return report


# ===== Grids =====


def iter_prime_diagrams(max_boxes: int, min_cols: int = 2, max_cols: int = 4) -> Iterator[SkewDiagram]:
    for d in iter_skew_shapes(max_boxes):
        if min_cols <= d.n_columns <= max_cols and is_prime(d):
            yield d


def iter_nonprime_diagrams(max_boxes: int, min_cols: int = 2) -> Iterator[SkewDiagram]:
    for d in iter_skew_shapes(max_boxes):
        if d.n_columns >= min_cols and not is_prime(d) and _has_consecutive_columns(d):
            yield d
