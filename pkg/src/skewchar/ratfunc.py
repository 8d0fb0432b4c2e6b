"""Univariate rational functions in ``u`` with exact rational coefficients.

Backed by ``sympy.Poly`` over ``QQ``. Every value is kept in canonical form:
numerator and denominator coprime, denominator monic, zero stored as 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np
from sympy import QQ, Poly, Rational, Symbol

U = Symbol("u")

Scalar = Union[int, Fraction]


def to_rational(x: Scalar) -> Rational:
    x = Fraction(x)
    return Rational(x.numerator, x.denominator)


def to_fraction(x) -> Fraction:
    r = Rational(x)
    return Fraction(int(r.p), int(r.q))


def _poly(expr) -> Poly:
    return Poly(expr, U, domain=QQ)


_ONE = _poly(1)
_ZERO = _poly(0)


@dataclass(frozen=True)
class RatFunc:
    num: Poly
    den: Poly

    # ===== Construction =====

    @classmethod
    def from_polys(cls, num: Poly, den: Poly) -> "RatFunc":
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return cls(_ZERO, _ONE)
        g = num.gcd(den)
        num = num.exquo(g)
        den = den.exquo(g)
        lc = den.LC()
        return cls(num.quo_ground(lc), den.monic())

    @classmethod
    def constant(cls, c: Scalar) -> "RatFunc":
        return cls.from_polys(_poly(to_rational(c)), _ONE)

    @classmethod
    def linear(cls, c: Scalar) -> "RatFunc":
        """Return ``u + c``."""
        return cls(_poly(U + to_rational(c)), _ONE)

    @classmethod
    def from_coeffs(cls, num: Sequence[Scalar], den: Sequence[Scalar] = (1,)) -> "RatFunc":
        """Build from coefficient lists, highest degree first."""
        if not den:
            raise ValueError("denominator coefficient list is empty")
        num_poly = Poly.from_list([to_rational(c) for c in num] or [0], U, domain=QQ)
        den_poly = Poly.from_list([to_rational(c) for c in den], U, domain=QQ)
        return cls.from_polys(num_poly, den_poly)

    @classmethod
    def from_roots(cls, roots: Sequence[Scalar]) -> "RatFunc":
        """Return the monic polynomial ``prod (u - t)``."""
        poly = _ONE
        for t in roots:
            poly = poly * _poly(U - to_rational(t))
        return cls(poly, _ONE)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(_ONE, _ONE)

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(_ZERO, _ONE)

    # ===== Arithmetic =====

    @staticmethod
    def _coerce(other: "RatFunc | Scalar") -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc.from_polys(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc.from_polys(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc.from_polys(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.num**exponent, self.den**exponent)

    def shift(self, w: Scalar) -> "RatFunc":
        """Return ``f(u + w)``."""
        if Fraction(w) == 0:
            return self
        g = _poly(U + to_rational(w))
        return RatFunc.from_polys(self.num.compose(g), self.den.compose(g))

    # ===== Evaluation =====

    def has_pole_at(self, x: Scalar) -> bool:
        return to_fraction(self.den.eval(to_rational(x))) == 0

    def __call__(self, x: Scalar) -> Fraction:
        point = to_rational(x)
        den = to_fraction(self.den.eval(point))
        if den == 0:
            raise ZeroDivisionError(f"pole at u={Fraction(x)}")
        return to_fraction(self.num.eval(point)) / den

    def complex_value(self, z: complex) -> complex:
        num = np.polyval([float(c) for c in self.num.all_coeffs()], z)
        den = np.polyval([float(c) for c in self.den.all_coeffs()], z)
        return complex(num / den)

    # ===== Predicates / display =====

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def coeffs(self) -> tuple[list[Fraction], list[Fraction]]:
        return (
            [to_fraction(c) for c in self.num.all_coeffs()],
            [to_fraction(c) for c in self.den.all_coeffs()],
        )

    def __str__(self) -> str:
        num = str(self.num.as_expr())
        if self.den == _ONE:
            return num
        return f"({num})/({self.den.as_expr()})"
