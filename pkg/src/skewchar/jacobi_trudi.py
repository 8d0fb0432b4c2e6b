"""Jacobi-Trudi determinants over the character ring.

Entries follow the conventions S_k = A_k = 0 for k < 0 and S_0 = A_0 = 1.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional, Sequence

from skewchar.characters import A_k, S_k, compare_polys, q_character
from skewchar.core_ring import CharPoly, Rat, exact_shift, poly_combination
from skewchar.diagrams import Partition, SkewDiagram, conjugate, contains_rectangle
from skewchar.exceptions import ShapeError
from skewchar.models import VerificationReport

logger = logging.getLogger(__name__)

Matrix = list[list[CharPoly]]
# (kind, k, shift) with S_k and A_k identified for k <= 1
EntryKey = tuple[str, int, Rat]
MinorCache = dict[tuple[tuple[EntryKey, ...], ...], CharPoly]

_ZERO_KEY: EntryKey = ("S", -1, 0)
_ONE_KEY: EntryKey = ("S", 0, 0)


@lru_cache(maxsize=4096)
def _entry_value(key: EntryKey, m: int, n: int) -> CharPoly:
    kind, k, shift = key
    if kind == "S":
        return S_k(k, shift, m, n)
    return A_k(k, shift, m, n)


@dataclass(frozen=True)
class JTEntry:
    """Symbolic matrix entry: S_k or A_k evaluated at u + shift."""

    kind: Literal["S", "A"]
    k: int
    shift: Fraction

    def key(self) -> EntryKey:
        if self.k < 0:
            return _ZERO_KEY
        if self.k == 0:
            return _ONE_KEY
        return ("S" if self.k == 1 else self.kind, self.k, exact_shift(self.shift))

    def value(self, m: int, n: int) -> CharPoly:
        return _entry_value(self.key(), m, n)

    def label(self) -> str:
        if self.k < 0:
            return "0"
        if self.k == 0:
            return "1"
        if self.shift > 0:
            arg = f"u+{self.shift}"
        elif self.shift < 0:
            arg = f"u-{-self.shift}"
        else:
            arg = "u"
        return f"{self.kind}_{self.k}({arg})"


def _require_containment(lam: Partition, mu: Partition) -> None:
    if not lam.contains(mu):
        raise ShapeError(f"mu={mu} is not contained in lambda={lam}")


def jt_symbols_S(lam: Partition, mu: Partition) -> list[list[JTEntry]]:
    _require_containment(lam, mu)
    size = lam.length
    return [
        [
            JTEntry("S", lam.part(i) - mu.part(j) - i + j, Fraction(mu.part(j) - j + 1))
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ]


def jt_symbols_A(lam: Partition, mu: Partition) -> list[list[JTEntry]]:
    _require_containment(lam, mu)
    lam_c, mu_c = conjugate(lam), conjugate(mu)
    size = lam.part(1)
    return [
        [
            JTEntry("A", lam_c.part(i) - mu_c.part(j) - i + j, Fraction(-mu_c.part(j) + j - 1))
            for j in range(1, size + 1)
        ]
        for i in range(1, size + 1)
    ]


def jt_matrix_S(lam: Partition, mu: Partition, m: int, n: int) -> Matrix:
    return [[e.value(m, n) for e in row] for row in jt_symbols_S(lam, mu)]


def jt_matrix_A(lam: Partition, mu: Partition, m: int, n: int) -> Matrix:
    return [[e.value(m, n) for e in row] for row in jt_symbols_A(lam, mu)]


# ===== Determinants =====


def _square_size(mat: Sequence[Sequence[CharPoly]], signature: Optional[tuple[int, int]]) -> tuple[int, int, int]:
    size = len(mat)
    if any(len(row) != size for row in mat):
        raise ValueError("matrix is not square")
    if signature is None:
        if not size:
            raise ValueError("empty matrix needs an explicit signature")
        signature = mat[0][0].signature
    return size, signature[0], signature[1]


def det(mat: Sequence[Sequence[CharPoly]], *, signature: Optional[tuple[int, int]] = None) -> CharPoly:
    """Cofactor expansion along rows, memoized on the set of used columns."""
    size, m, n = _square_size(mat, signature)
    one = CharPoly.one(m, n)
    full = (1 << size) - 1
    memo: dict[int, CharPoly] = {}

    def minor(used: int) -> CharPoly:
        if used == full:
            return one
        cached = memo.get(used)
        if cached is not None:
            return cached
        row = mat[used.bit_count()]
        products = []
        sign = 1
        for j in range(size):
            if used >> j & 1:
                continue
            entry = row[j]
            if entry:
                rest = minor(used | (1 << j))
                if rest:
                    products.append((sign, entry, rest))
            sign = -sign
        total = poly_combination(products, m, n)
        memo[used] = total
        return total

    return minor(0)


def jt_det(
    symbols: Sequence[Sequence[JTEntry]], m: int, n: int, *, minors: Optional[MinorCache] = None
) -> CharPoly:
    """Determinant of a symbolic matrix, memoized on the entries of each minor.

    Passing the same ``minors`` dict to several calls reuses every minor whose
    entries coincide, such as the shared S_0 and S_1 = A_1 blocks of the two
    Jacobi-Trudi forms of one shape.
    """
    keys = [[e.key() for e in row] for row in symbols]
    size = len(keys)
    if any(len(row) != size for row in keys):
        raise ValueError("matrix is not square")
    memo: MinorCache = {} if minors is None else minors
    one = CharPoly.one(m, n)

    def minor(row: int, cols: tuple[int, ...]) -> CharPoly:
        if row == size:
            return one
        content = tuple(tuple(keys[i][j] for j in cols) for i in range(row, size))
        cached = memo.get(content)
        if cached is not None:
            return cached
        products = []
        for pos, j in enumerate(cols):
            key = keys[row][j]
            if key[1] < 0:
                continue
            rest = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            if rest:
                products.append((-1 if pos % 2 else 1, _entry_value(key, m, n), rest))
        total = poly_combination(products, m, n)
        memo[content] = total
        return total

    return minor(0, tuple(range(size)))


def det_leibniz(mat: Sequence[Sequence[CharPoly]], *, signature: Optional[tuple[int, int]] = None) -> CharPoly:
    size, m, n = _square_size(mat, signature)
    total = CharPoly.zero(m, n)
    for perm in itertools.permutations(range(size)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = CharPoly.one(m, n)
        for i, j in enumerate(perm):
            term = term * mat[i][j]
            if not term:
                break
        total = total - term if inversions % 2 else total + term
    return total


# ===== Verification =====


def verify_jt(
    lam: Partition, mu: Partition, m: int, n: int, *, strict: bool = True
) -> VerificationReport:
    """Compare the tableau character with both determinant forms.

    When the shape contains the (m+1) x (n+1) rectangle both determinants must
    also vanish exactly.
    """
    started = time.perf_counter()
    diagram = SkewDiagram(lam, mu)
    character = q_character(diagram, m, n)
    minors: MinorCache = {}
    det_s = jt_det(jt_symbols_S(lam, mu), m, n, minors=minors)
    det_a = jt_det(jt_symbols_A(lam, mu), m, n, minors=minors)

    report = VerificationReport(
        name="jacobi-trudi",
        stats={"lam": str(lam), "mu": str(mu), "m": m, "n": n, "monomials": len(character)},
    )
    report.add(compare_polys("tableaux=S-determinant", character, det_s))
    report.add(compare_polys("tableaux=A-determinant", character, det_a))
    if contains_rectangle(diagram, m + 1, n + 1):
        zero = CharPoly.zero(m, n)
        report.add(compare_polys("S-determinant vanishes", det_s, zero))
        report.add(compare_polys("A-determinant vanishes", det_a, zero))

    logger.info(
        "jt verify done lam=%s mu=%s m=%d n=%d terms=%d passed=%s duration_ms=%d",
        lam,
        mu,
        m,
        n,
        len(character),
        report.passed,
        int((time.perf_counter() - started) * 1000),
    )
    if strict:
        report.raise_for_status()
    return report
