"""Truncated series in q*tau with coefficients depending on u.

A series stores the coefficients of (q tau)^k for k = 0..order. The shift
operator moves past coefficients by tau f(u) = f(u - 1) tau, so products
pick up a shift on the right factor. Coefficients may be any ring value with
``+``, ``-``, ``*``, truthiness and ``shift(w)`` (``CharPoly`` and
``RatFunc`` both qualify).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterator, Protocol, Sequence, TypeVar

from skewchar.exceptions import NotUnitNormalized


class ShiftRing(Protocol):
    def __add__(self, other: Any) -> Any: ...
    def __sub__(self, other: Any) -> Any: ...
    def __mul__(self, other: Any) -> Any: ...
    def __neg__(self) -> Any: ...
    def __bool__(self) -> bool: ...
    def shift(self, w: Any) -> Any: ...


C = TypeVar("C", bound=ShiftRing)
D = TypeVar("D", bound=ShiftRing)


@dataclass(frozen=True)
class OperatorSeries(Generic[C]):
    coeffs: tuple[C, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least its constant coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[C], order: int, zero: C) -> "OperatorSeries[C]":
        """Pad with ``zero`` or truncate so that the series has the given order."""
        padded = list(coeffs[: order + 1])
        padded += [zero] * (order + 1 - len(padded))
        return cls(tuple(padded))

    @classmethod
    def one_minus(cls, a: C, order: int) -> "OperatorSeries[C]":
        """Return ``1 - a tau``."""
        zero = a * 0
        return cls.from_coeffs([zero + 1, -a], order, zero)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> C:
        return self.coeffs[k]

    def __iter__(self) -> Iterator[C]:
        return iter(self.coeffs)

    def _zero(self) -> C:
        return self.coeffs[0] * 0

    def truncate(self, order: int) -> "OperatorSeries[C]":
        return OperatorSeries.from_coeffs(self.coeffs, order, self._zero())

    def map(self, f: Callable[[C], D]) -> "OperatorSeries[D]":
        return OperatorSeries(tuple(f(c) for c in self.coeffs))

    def __add__(self, other: "OperatorSeries[C]") -> "OperatorSeries[C]":
        order = min(self.order, other.order)
        return OperatorSeries(tuple(self[k] + other[k] for k in range(order + 1)))

    def __sub__(self, other: "OperatorSeries[C]") -> "OperatorSeries[C]":
        order = min(self.order, other.order)
        return OperatorSeries(tuple(self[k] - other[k] for k in range(order + 1)))

    def __mul__(self, other: "OperatorSeries[C]") -> "OperatorSeries[C]":
        return op_mul(self, other)

    def is_unit_normalized(self) -> bool:
        return not (self.coeffs[0] - 1)


def op_mul(a: OperatorSeries[C], b: OperatorSeries[C]) -> OperatorSeries[C]:
    """Product truncated at the smaller order: (AB)_k = sum_i A_i B_{k-i}(u - i)."""
    order = min(a.order, b.order)
    out = []
    for k in range(order + 1):
        total = a[0] * 0
        for i in range(k + 1):
            if a[i] and b[k - i]:
                total = total + a[i] * b[k - i].shift(-i)
        out.append(total)
    return OperatorSeries(tuple(out))


def op_inv(a: OperatorSeries[C]) -> OperatorSeries[C]:
    """Two-sided inverse of a series with constant term 1."""
    if not a.is_unit_normalized():
        raise NotUnitNormalized(f"constant term is {a[0]}, expected 1")
    out = [a[0]]
    for k in range(1, a.order + 1):
        total = a[0] * 0
        for j in range(1, k + 1):
            if a[j] and out[k - j]:
                total = total + a[j] * out[k - j].shift(-j)
        out.append(-total)
    return OperatorSeries(tuple(out))
