"""Semi-standard gl(m|n) tableaux and the lattice-path model.

Entries 1..m are even, m+1..m+n are odd. A filling is semi-standard when it
weakly increases along rows and columns, even entries strictly increase down
columns and odd entries strictly increase along rows.

Tableaux are produced column by column. ``count_ssyt`` and the q-character
use a column transfer with memoization on the previous column's filling, so
neither materializes the tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, TypeVar

from skewchar.core_ring import DSymbol, Monomial
from skewchar.diagrams import Box, GlWeight, Partition, SkewDiagram
from skewchar.exceptions import MalformedTuple

T = TypeVar("T")

EntryRange = tuple[int, int]


# ===== Tableaux =====


@dataclass(frozen=True)
class Tableau:
    diagram: SkewDiagram
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.diagram.size:
            raise ValueError(f"{len(self.entries)} entries for {self.diagram.size} boxes")

    @classmethod
    def from_mapping(cls, diagram: SkewDiagram, values: dict[Box, int]) -> "Tableau":
        return cls(diagram, tuple(values[b] for b in diagram.boxes()))

    def as_dict(self) -> dict[Box, int]:
        return dict(zip(self.diagram.boxes(), self.entries))

    def __getitem__(self, box: Box) -> int:
        return self.as_dict()[box]

    def rows(self) -> list[list[int]]:
        out: list[list[int]] = []
        values = iter(self.entries)
        for i in range(1, self.diagram.lam.length + 1):
            out.append([next(values) for _ in range(self.diagram.lam.part(i) - self.diagram.mu.part(i))])
        return out

    def to_bracket(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in self.rows()) + "]"

    def monomial(self, m: int) -> Monomial:
        counts: dict[DSymbol, int] = {}
        for box, v in zip(self.diagram.boxes(), self.entries):
            s = DSymbol(v, self.diagram.content(box))
            counts[s] = counts.get(s, 0) + 1
        return Monomial.build(counts, m)

    def weight(self, m: int, n: int) -> GlWeight:
        coords = [0] * (m + n)
        for v in self.entries:
            coords[v - 1] += 1
        return GlWeight(tuple(coords))


def is_semistandard(t: Tableau, m: int, n: int) -> bool:
    values = t.as_dict()
    for (i, j), v in values.items():
        if not 1 <= v <= m + n:
            return False
        right = values.get((i, j + 1))
        if right is not None and (right < v or (right == v and v > m)):
            return False
        below = values.get((i + 1, j))
        if below is not None and (below < v or (below == v and v <= m)):
            return False
    return True


def is_standard(t: Tableau) -> bool:
    if sorted(t.entries) != list(range(1, len(t.entries) + 1)):
        return False
    values = t.as_dict()
    for (i, j), v in values.items():
        for nb in ((i, j + 1), (i + 1, j)):
            if nb in values and values[nb] <= v:
                return False
    return True


def row_tableau(d: SkewDiagram) -> Tableau:
    return Tableau(d, tuple(range(1, d.size + 1)))


def column_tableau(d: SkewDiagram) -> Tableau:
    order = sorted(d.boxes(), key=lambda b: (b[1], b[0]))
    values = {box: k for k, box in enumerate(order, start=1)}
    return Tableau.from_mapping(d, values)


# ===== Column transfer =====


@lru_cache(maxsize=None)
def _column_fillings(height: int, lo: int, hi: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Weakly increasing columns of the given height, strict on even entries."""
    if height <= 0:
        return ((),)
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == height:
            out.append(prefix)
            return
        start = lo if not prefix else prefix[-1] + (1 if prefix[-1] <= m else 0)
        for v in range(start, hi + 1):
            extend(prefix + (v,))

    extend(())
    return tuple(out)


def _compatible(
    left_top: int, left: tuple[int, ...], top: int, column: tuple[int, ...], m: int
) -> bool:
    for k, v in enumerate(column):
        r = top + k - left_top
        if 0 <= r < len(left):
            w = left[r]
            if v < w or (v == w and v > m):
                return False
    return True


def _entry_range(m: int, n: int, entries: Optional[EntryRange]) -> EntryRange:
    return entries if entries is not None else (1, m + n)


def column_transfer(
    d: SkewDiagram,
    m: int,
    n: int,
    unit: T,
    column_value: Callable[[int, int, tuple[int, ...]], T],
    entries: Optional[EntryRange] = None,
) -> T:
    """Sum over SSYT of the product of per-column values.

    ``column_value(j, top, filling)`` gives the ring value of column j filled
    from row ``top`` downward.
    """
    lo, hi = _entry_range(m, n, entries)
    ranges = d.column_ranges()

    @lru_cache(maxsize=None)
    def tail(j: int, prev: tuple[int, ...]) -> T:
        if j == len(ranges):
            return unit
        top, bottom = ranges[j]
        prev_top = ranges[j - 1][0] if j else 1
        total = unit * 0
        for column in _column_fillings(bottom - top + 1, lo, hi, m):
            if _compatible(prev_top, prev, top, column, m):
                rest = tail(j + 1, column)
                if rest:
                    total = total + column_value(j, top, column) * rest
        return total

    return tail(0, ())


def count_ssyt(d: SkewDiagram, m: int, n: int, entries: Optional[EntryRange] = None) -> int:
    return column_transfer(d, m, n, 1, lambda j, top, column: 1, entries)


def enumerate_ssyt(
    d: SkewDiagram, m: int, n: int, entries: Optional[EntryRange] = None
) -> Iterator[Tableau]:
    """Yield every SSYT once, column by column with the smallest entries first."""
    lo, hi = _entry_range(m, n, entries)
    ranges = d.column_ranges()

    def walk(j: int, prev: tuple[int, ...], values: dict[Box, int]) -> Iterator[Tableau]:
        if j == len(ranges):
            yield Tableau.from_mapping(d, values)
            return
        top, bottom = ranges[j]
        prev_top = ranges[j - 1][0] if j else 1
        for column in _column_fillings(bottom - top + 1, lo, hi, m):
            if not _compatible(prev_top, prev, top, column, m):
                continue
            placed = dict(values)
            for k, v in enumerate(column):
                placed[(top + k, j + 1)] = v
            yield from walk(j + 1, column, placed)

    yield from walk(0, (), {})


# ===== Lattice paths =====

Point = tuple[int, int]


@dataclass(frozen=True)
class LatticePath:
    start: Point
    steps: tuple[str, ...]

    def points(self) -> list[Point]:
        x, y = self.start
        out = [(x, y)]
        for step in self.steps:
            if step == "E":
                x += 1
            elif step == "N":
                y += 1
            elif step == "NE":
                x, y = x + 1, y + 1
            else:
                raise MalformedTuple(f"unknown step {step!r}")
            out.append((x, y))
        return out

    @property
    def end(self) -> Point:
        return self.points()[-1]

    def labels(self) -> list[tuple[int, int]]:
        """(y, x) at the start of every east or northeast step."""
        x, y = self.start
        out = []
        for step in self.steps:
            if step in ("E", "NE"):
                out.append((y, x))
            x, y = (x + 1 if step in ("E", "NE") else x), (y + 1 if step in ("N", "NE") else y)
        return out


@dataclass(frozen=True)
class PathTuple:
    lam: Partition
    mu: Partition
    m: int
    n: int
    paths: tuple[LatticePath, ...]


def _endpoints(lam: Partition, mu: Partition, m: int, n: int, i: int) -> tuple[Point, Point]:
    return (mu.part(i) - i + 1, 1), (lam.part(i) - i + 1, m + n + 1)


def _paths_between(start: Point, end: Point, m: int, n: int) -> list[LatticePath]:
    out: list[LatticePath] = []
    top = m + n + 1

    def walk(x: int, y: int, steps: tuple[str, ...]) -> None:
        if x > end[0]:
            return
        if y == top:
            if x == end[0]:
                out.append(LatticePath(start, steps))
            return
        if y <= m:
            walk(x + 1, y, steps + ("E",))
            walk(x, y + 1, steps + ("N",))
        else:
            walk(x, y + 1, steps + ("N",))
            walk(x + 1, y + 1, steps + ("NE",))

    walk(start[0], start[1], ())
    return out


def lgv_tuples(lam: Partition, mu: Partition, m: int, n: int) -> Iterator[PathTuple]:
    """Yield the non-intersecting path tuples for the identity permutation."""
    rows = lam.length
    candidates = [_paths_between(*_endpoints(lam, mu, m, n, i), m, n) for i in range(1, rows + 1)]

    def walk(i: int, chosen: tuple[LatticePath, ...], occupied: frozenset[Point]) -> Iterator[PathTuple]:
        if i == rows:
            yield PathTuple(lam, mu, m, n, chosen)
            return
        for path in candidates[i]:
            pts = path.points()
            if occupied.isdisjoint(pts):
                yield from walk(i + 1, chosen + (path,), occupied | frozenset(pts))

    yield from walk(0, (), frozenset())


def tuple_to_tableau(t: PathTuple) -> Tableau:
    if len(t.paths) != t.lam.length:
        raise MalformedTuple(f"{len(t.paths)} paths for {t.lam.length} rows")
    seen: set[Point] = set()
    values: dict[Box, int] = {}
    for i, path in enumerate(t.paths, start=1):
        start, end = _endpoints(t.lam, t.mu, t.m, t.n, i)
        pts = path.points()
        if path.start != start or pts[-1] != end:
            raise MalformedTuple(f"path {i} runs {path.start}->{pts[-1]}, expected {start}->{end}")
        for (x, y), step in zip(pts, path.steps):
            legal = ("E", "N") if y <= t.m else ("N", "NE")
            if step not in legal or y > t.m + t.n:
                raise MalformedTuple(f"path {i} takes step {step} at level {y}")
        if seen.intersection(pts):
            raise MalformedTuple(f"path {i} meets an earlier path")
        seen.update(pts)
        for k, (label, _x) in enumerate(path.labels(), start=1):
            values[(i, t.mu.part(i) + k)] = label
    return Tableau.from_mapping(SkewDiagram(t.lam, t.mu), values)
