"""Partitions, skew diagrams with content anchors, and weight formulas.

A box is a pair ``(row, column)``, both 1-based. The content of box (i, j)
in a diagram with anchor ``z`` is ``j - i - z``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Sequence, Union

from skewchar.core_ring import format_rat
from skewchar.exceptions import NotHook, NotPrime, ParseError, ShapeError, TooFewColumns

Box = tuple[int, int]


# ===== Partitions =====


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ShapeError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(p for p in parts if p))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"5,3,3"``; an empty string or ``"0"`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError as exc:
            raise ParseError(f"partition must be comma-separated integers, got {text!r}") from exc
        return cls(parts)

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Partition":
        if rows < 0 or cols < 0:
            raise ShapeError("rectangle dimensions must be nonnegative")
        return cls((cols,) * rows)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """Return the i-th part (1-based), 0 beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return other.length <= self.length and all(other.part(i) <= self.part(i) for i in range(1, other.length + 1))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p.parts if part >= j) for j in range(1, p.parts[0] + 1)))


def is_hook(p: Partition, m: int, n: int) -> bool:
    return p.part(m + 1) <= n


# ===== Weights =====


@dataclass(frozen=True)
class GlWeight:
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, size: int) -> "GlWeight":
        return cls((Fraction(0),) * size)

    @classmethod
    def unit(cls, i: int, size: int) -> "GlWeight":
        return cls(tuple(Fraction(int(k == i - 1)) for k in range(size)))

    def __add__(self, other: "GlWeight") -> "GlWeight":
        if len(self.coords) != len(other.coords):
            raise ValueError("weights of different rank")
        return GlWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def dominates(self, other: "GlWeight") -> bool:
        """Return True iff ``self - other`` is a nonnegative sum of simple roots."""
        diff = [a - b for a, b in zip(self.coords, other.coords)]
        if sum(diff) != 0:
            return False
        running = Fraction(0)
        for d in diff[:-1]:
            running += d
            if running < 0:
                return False
        return True

    def to_json(self) -> list[str]:
        return [format_rat(c) for c in self.coords]

    def label(self) -> str:
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c:
                coeff = "" if c == 1 else f"{c}"
                parts.append(f"{coeff}e{i}")
        return "+".join(parts).replace("+-", "-") or "0"


def natural_weight(p: Partition, m: int, n: int) -> GlWeight:
    if not is_hook(p, m, n):
        raise NotHook(f"{p} is not an ({m}|{n})-hook partition")
    conj = conjugate(p)
    return GlWeight(tuple(p.part(i) for i in range(1, m + 1)) + tuple(max(conj.part(j) - m, 0) for j in range(1, n + 1)))


def circ_weight(p: Partition, m1: int, n1: int, m: int, n: int) -> GlWeight:
    """Four-block weight for the embedding gl(m1|n1) + gl(m|n) into gl(m1+m|n1+n)."""
    if not is_hook(p, m1 + m, n1 + n):
        raise NotHook(f"{p} is not an ({m1 + m}|{n1 + n})-hook partition")
    conj = conjugate(p)
    coords = [p.part(i) for i in range(1, m1 + 1)]
    coords += [max(conj.part(j) - m1, 0) for j in range(1, n1 + 1)]
    coords += [max(p.part(i) - n1, 0) for i in range(m1 + 1, m1 + m + 1)]
    coords += [max(conj.part(j) - m1 - m, 0) for j in range(n1 + 1, n1 + n + 1)]
    return GlWeight(tuple(coords))


# ===== Skew diagrams =====


@dataclass(frozen=True)
class SkewDiagram:
    lam: Partition
    mu: Partition = field(default_factory=Partition)
    anchor: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchor", Fraction(self.anchor))
        if not self.lam.contains(self.mu):
            raise ShapeError(f"mu={self.mu} is not contained in lambda={self.lam}")

    @classmethod
    def straight(cls, lam: Union[Partition, Sequence[int]], anchor: Union[int, Fraction] = 0) -> "SkewDiagram":
        lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
        return cls(lam, Partition(), Fraction(anchor))

    @classmethod
    def from_boxes(cls, boxes: Iterable[Box], anchor: Union[int, Fraction] = 0) -> "SkewDiagram":
        """Build the normalized diagram on a box set, keeping every box's content.

        The box set may sit anywhere in the plane; it is translated so that its
        top row is row 1 and its leftmost column is column 1.
        """
        box_set = set(boxes)
        if not box_set:
            return cls(Partition(), Partition(), Fraction(0))
        r0 = min(i for i, _ in box_set)
        c0 = min(j for _, j in box_set)
        norm = {(i - r0 + 1, j - c0 + 1) for i, j in box_set}
        rows = max(i for i, _ in norm)
        spans: list[tuple[int, int] | None] = []
        for i in range(1, rows + 1):
            cols = sorted(j for r, j in norm if r == i)
            if not cols:
                spans.append(None)
            elif cols[-1] - cols[0] + 1 != len(cols):
                raise ShapeError(f"row {i} of the box set is not an interval")
            else:
                spans.append((cols[0] - 1, cols[-1]))
        lam: list[int] = [0] * rows
        mu: list[int] = [0] * rows
        below = 0
        for i in range(rows - 1, -1, -1):
            span = spans[i]
            if span is None:
                lam[i] = mu[i] = below
            else:
                mu[i], lam[i] = span
            below = lam[i]
        try:
            diagram = cls(Partition(tuple(lam)), Partition(tuple(mu)), Fraction(anchor) - c0 + r0)
        except ShapeError as exc:
            raise ShapeError(f"box set is not a skew shape: {exc}") from exc
        if set(diagram.boxes()) != norm:
            raise ShapeError("box set is not a skew shape")
        return diagram

    # ===== Geometry =====

    def boxes(self) -> tuple[Box, ...]:
        """Boxes in row-major order."""
        return tuple(
            (i, j)
            for i in range(1, self.lam.length + 1)
            for j in range(self.mu.part(i) + 1, self.lam.part(i) + 1)
        )

    def content(self, box: Box) -> Fraction:
        i, j = box
        return j - i - self.anchor

    def contents(self) -> list[Fraction]:
        return [self.content(b) for b in self.boxes()]

    @property
    def size(self) -> int:
        return self.lam.size - self.mu.size

    @property
    def is_empty(self) -> bool:
        return self.size == 0

    @property
    def n_columns(self) -> int:
        return self.lam.part(1)

    def column_ranges(self) -> list[tuple[int, int]]:
        """For each column j = 1..lambda_1, the (top, bottom) rows; top > bottom when empty."""
        lam_c, mu_c = conjugate(self.lam), conjugate(self.mu)
        return [(mu_c.part(j) + 1, lam_c.part(j)) for j in range(1, self.n_columns + 1)]

    def shifted(self, w: Union[int, Fraction]) -> "SkewDiagram":
        """Return the same shape with every content increased by w."""
        return SkewDiagram(self.lam, self.mu, self.anchor - Fraction(w))

    def normalized(self) -> "SkewDiagram":
        return SkewDiagram.from_boxes(self.boxes(), self.anchor)

    def content_map(self) -> dict[Box, Fraction]:
        return {b: self.content(b) for b in self.boxes()}

    def __str__(self) -> str:
        shape = f"{self.lam}/{self.mu}" if self.mu.parts else f"{self.lam}"
        return shape if not self.anchor else f"{shape}@{self.anchor}"


# ===== Constructions =====


def rotate180(p: Partition) -> SkewDiagram:
    """Rotate a Young diagram by 180 degrees; the bottom-right box gets content 0."""
    if not p.parts:
        return SkewDiagram(Partition())
    width, height = p.part(1), p.length
    mu = tuple(width - p.part(height - r + 1) for r in range(1, height + 1))
    return SkewDiagram(Partition.rectangle(height, width), Partition(mu), Fraction(width - height))


def build_xi(m: int, n: int) -> SkewDiagram:
    return SkewDiagram(Partition.rectangle(m, n))


def build_xi_plus(m: int, n: int) -> SkewDiagram:
    return SkewDiagram(Partition.rectangle(m, n + 1))


def build_xi_minus(m: int, n: int) -> SkewDiagram:
    return SkewDiagram(Partition.rectangle(m + 1, n))


def build_W(lam: Partition, m: int, n: int) -> SkewDiagram:
    """Glue the rotated lam to the left of the m x n rectangle, bottom rows aligned."""
    if lam.length > m:
        raise ShapeError(f"W needs a partition with at most {m} rows, got {lam}")
    width = lam.part(1)
    mu = tuple(width - lam.part(m - r + 1) for r in range(1, m + 1))
    return SkewDiagram(Partition.rectangle(m, width + n), Partition(mu), Fraction(width))


def build_S(mu: Partition, m: int, n: int) -> SkewDiagram:
    """Attach mu below the m x n rectangle."""
    if mu.part(1) > n:
        raise ShapeError(f"S needs a partition with parts at most {n}, got {mu}")
    return SkewDiagram(Partition((n,) * m + mu.parts))


def build_upsilon(kind: Literal["plus", "minus"], i: int, m: int, n: int) -> SkewDiagram:
    if kind == "plus":
        if not 0 <= i <= n:
            raise ShapeError(f"plus index must lie in 0..{n}, got {i}")
        return SkewDiagram(Partition((n,) * m + (i,)))
    if kind == "minus":
        if not 0 <= i <= m:
            raise ShapeError(f"minus index must lie in 0..{m}, got {i}")
        return SkewDiagram(Partition((n + 1,) * i + (n,) * (m - i)))
    raise ValueError(f"unknown kind {kind!r}")


def contains_rectangle(d: SkewDiagram, rows: int, cols: int) -> bool:
    if rows <= 0 or cols <= 0:
        return True
    return any(
        d.lam.part(i + rows - 1) - d.mu.part(i) >= cols for i in range(1, d.lam.length - rows + 2)
    )


# ===== Prime diagrams and the T-system family =====


def is_prime(d: SkewDiagram) -> bool:
    if d.is_empty:
        return False
    d = d.normalized()
    lam_c, mu_c = conjugate(d.lam), conjugate(d.mu)
    return all(lam_c.part(j + 1) - mu_c.part(j) >= 1 for j in range(1, d.n_columns))


@dataclass(frozen=True)
class TSystemFamily:
    plus: SkewDiagram
    minus: SkewDiagram
    zero: SkewDiagram
    x: SkewDiagram
    y: SkewDiagram


def tsystem_family(d: SkewDiagram) -> TSystemFamily:
    """Return U+ (leftmost column dropped), U-, U0, X and Y for a prime diagram."""
    d = d.normalized()
    cols = d.n_columns
    if cols < 2:
        raise TooFewColumns(f"{d} has {cols} column(s); the family needs at least 2")
    if not is_prime(d):
        raise NotPrime(f"{d} is not prime")
    lam_c, mu_c = conjugate(d.lam), conjugate(d.mu)
    boxes = d.boxes()
    plus = [b for b in boxes if b[1] >= 2]
    minus = [b for b in boxes if b[1] <= cols - 1]
    zero = [b for b in boxes if 2 <= b[1] <= cols - 1]
    x = [
        (i, j)
        for j in range(1, cols)
        for i in range(mu_c.part(j) + 1, lam_c.part(j + 1))
    ]
    y = [
        (i, j)
        for j in range(1, cols)
        for i in range(mu_c.part(j + 1), lam_c.part(j) + 1)
    ]
    make = SkewDiagram.from_boxes
    return TSystemFamily(
        plus=make(plus, d.anchor),
        minus=make(minus, d.anchor),
        zero=make(zero, d.anchor),
        x=make(x, d.anchor),
        y=make(y, d.anchor),
    )


# ===== Irreducibility of tensor products =====


def _bracket(values: Sequence[int], i: int, j: int) -> set[int]:
    """Integers between values[j] and values[i] minus values[i..j] (1-based, i < j)."""
    lo, hi = values[j - 1], values[i - 1]
    return set(range(lo, hi + 1)) - set(values[i - 1 : j])


def _nonx_holds(lam: Partition, mu: Partition, d: int, size: int) -> bool:
    a = [lam.part(k) - k + 1 for k in range(1, size + 1)]
    b = [mu.part(k) - k + 1 for k in range(1, size + 1)]
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            bracket_a = _bracket(a, i, j)
            bracket_b = _bracket(b, i, j)
            first = b[j - 1] + d not in bracket_a and b[i - 1] + d not in bracket_a
            second = a[j - 1] - d not in bracket_b and a[i - 1] - d not in bracket_b
            if not (first or second):
                return False
    return True


def irreducibility_condition(
    lam: Partition, mu: Partition, z: Union[int, Fraction], w: Union[int, Fraction]
) -> bool:
    """Check the pairwise bracket condition for the tensor product of two evaluation modules."""
    diff = Fraction(z) - Fraction(w)
    if diff.denominator != 1:
        return True
    d = int(diff)
    size = max(lam.length, mu.length) + abs(d) + 2
    result = _nonx_holds(lam, mu, d, size)
    if result != _nonx_holds(lam, mu, d, size + 5):
        raise AssertionError(f"bracket condition did not stabilize for {lam}, {mu}, z-w={diff}")
    return result


# ===== Enumeration helpers =====


def iter_partitions(size: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` in reverse lexicographic order."""
    if size == 0:
        yield Partition()
        return
    top = size if max_part is None else min(size, max_part)
    for first in range(top, 0, -1):
        for rest in iter_partitions(size - first, first):
            yield Partition((first,) + rest.parts)


def iter_hooks(max_boxes: int, m: int, n: int) -> Iterator[Partition]:
    for size in range(1, max_boxes + 1):
        for p in iter_partitions(size):
            if is_hook(p, m, n):
                yield p


def iter_skew_shapes(max_boxes: int, min_boxes: int = 1) -> Iterator[SkewDiagram]:
    """Skew shapes with no empty rows or columns whose bottom row starts in column 1.

    Rows are grown upward from the bottom row; a new row may not start right of
    the end of the row below, so no column is left empty.
    """

    def grow(rows: list[tuple[int, int]], used: int) -> Iterator[list[tuple[int, int]]]:
        yield rows
        low_mu, low_lam = rows[-1]
        for mu in range(low_mu, low_lam + 1):
            for lam in range(max(low_lam, mu + 1), mu + max_boxes - used + 1):
                yield from grow(rows + [(mu, lam)], used + lam - mu)

    for width in range(1, max_boxes + 1):
        for rows in grow([(0, width)], width):
            used = sum(lam - mu for mu, lam in rows)
            if used < min_boxes:
                continue
            top_down = rows[::-1]
            yield SkewDiagram(Partition(tuple(lam for _, lam in top_down)), Partition(tuple(mu for mu, _ in top_down)))
