"""Commutative ring of d-symbols carrying q-characters and Harish-Chandra images.

A symbol ``D(i, c)`` stands for ``d_i(u + c)``. Polynomials have integer
coefficients; every monomial carries a Z/2 parity equal to the sum of the
exponents of its odd symbols (index > m).

Monomials are totally ordered graded-lexicographically, with symbols ordered
by ``(index, shift)``; the smallest symbol is the most significant one. Exact
division reduces leading terms under this order.

Internally a polynomial maps the sorted tuple of its monomial's symbols,
repeated by exponent, to the coefficient. Integral shifts are stored as
``int`` so that hashing and ordering of symbols stay in C.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Iterable, Iterator, Mapping, Union

from skewchar.exceptions import NotDivisible, ParseError, SignatureMismatch
from skewchar.ratfunc import RatFunc

Rat = Union[int, Fraction]


def parse_rat(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"``, ``"k"`` or an int into an exact rational."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def format_rat(x: Rat) -> str:
    """Render a rational as ``"p/q"`` (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def exact_shift(c: Rat) -> Rat:
    """Return c as an int when it is integral, else as a Fraction."""
    if type(c) is int:
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def kappa(i: int, m: int) -> int:
    return i - 1 if i <= m else 2 * m - i


def symbol_sign(i: int, m: int) -> int:
    return 1 if i <= m else -1


# ===== Symbols and monomials =====


class DSymbol(tuple[int, Rat]):
    """``d_index(u + shift)`` as an ``(index, shift)`` pair."""

    __slots__ = ()

    def __new__(cls, index: int, shift: Rat = 0) -> "DSymbol":
        return tuple.__new__(cls, (index, exact_shift(shift)))

    def __getnewargs__(self) -> tuple[int, Rat]:  # type: ignore[override]
        return (self[0], self[1])

    @property
    def index(self) -> int:
        return self[0]

    @property
    def shift(self) -> Rat:
        return self[1]

    def shifted(self, w: Rat) -> "DSymbol":
        return DSymbol(self[0], self[1] + w)

    def __str__(self) -> str:
        return f"d[{self[0]};{self[1]}]"

    def __repr__(self) -> str:
        return f"DSymbol({self[0]}, {self[1]!r})"


Factors = tuple[tuple[DSymbol, int], ...]
Symbols = tuple[DSymbol, ...]


def _grlex_key(factors: Factors) -> tuple:
    degree = sum(e for _, e in factors)
    return (degree, tuple((-s[0], -s[1], e) for s, e in factors))


def _factors_of(symbols: Symbols) -> Factors:
    return tuple((s, sum(1 for _ in group)) for s, group in itertools.groupby(symbols))


def _odd_count(symbols: Symbols, m: int) -> int:
    return sum(1 for s in symbols if s[0] > m) % 2


@dataclass(frozen=True, slots=True)
class Monomial:
    """Sorted product of d-symbols with its parity."""

    factors: Factors = ()
    parity: int = 0
    key: tuple = field(default=(), compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "key", _grlex_key(self.factors))

    @classmethod
    def build(cls, exponents: Mapping[DSymbol, int], m: int) -> "Monomial":
        factors = tuple(sorted((s, e) for s, e in exponents.items() if e))
        if any(e < 0 for _, e in factors):
            raise ValueError("negative exponent in monomial")
        parity = sum(e for s, e in factors if s[0] > m) % 2
        return cls(factors, parity)

    @classmethod
    def of(cls, m: int, *symbols: tuple[int, Rat]) -> "Monomial":
        counts: dict[DSymbol, int] = {}
        for i, c in symbols:
            s = DSymbol(i, c)
            counts[s] = counts.get(s, 0) + 1
        return cls.build(counts, m)

    @classmethod
    def from_symbols(cls, symbols: Symbols, m: int) -> "Monomial":
        return cls(_factors_of(symbols), _odd_count(symbols, m))

    @property
    def symbols(self) -> Symbols:
        """Return the symbols in order, each repeated by its exponent."""
        return tuple(s for s, e in self.factors for _ in range(e))

    @property
    def degree(self) -> int:
        return self.key[0]

    def exponents(self) -> dict[DSymbol, int]:
        return dict(self.factors)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self.factors:
            return other
        if not other.factors:
            return self
        symbols = tuple(sorted(self.symbols + other.symbols))
        return Monomial(_factors_of(symbols), (self.parity + other.parity) % 2)

    def divide(self, other: "Monomial") -> "Monomial | None":
        """Return ``self / other`` when it is a monomial, else None."""
        counts = dict(self.factors)
        for s, e in other.factors:
            left = counts.get(s, 0) - e
            if left < 0:
                return None
            if left:
                counts[s] = left
            else:
                del counts[s]
        return Monomial(tuple(sorted(counts.items())), (self.parity - other.parity) % 2)

    def shifted(self, w: Rat) -> "Monomial":
        return Monomial(tuple((s.shifted(w), e) for s, e in self.factors), self.parity)

    def recomputed_parity(self, m: int) -> int:
        return sum(e for s, e in self.factors if s[0] > m) % 2

    def to_text(self, coeff: int) -> str:
        parts = [f"{coeff:+d}"]
        for s, e in self.factors:
            parts.append(str(s) if e == 1 else f"{s}^{e}")
        return " * ".join(parts)

    def to_json(self, coeff: int) -> dict[str, Any]:
        return {
            "coeff": coeff,
            "parity": self.parity,
            "factors": [{"i": s.index, "c": format_rat(s.shift), "e": e} for s, e in self.factors],
        }


def _add_product(
    terms: dict[Symbols, int], a: Mapping[Symbols, int], b: Mapping[Symbols, int], scale: int
) -> None:
    """Accumulate ``scale * a * b`` into terms; zero coefficients are left in place."""
    if len(a) > len(b):
        a, b = b, a
    b_items = list(b.items())
    get = terms.get
    for ka, ca in a.items():
        ca *= scale
        if not ka:
            for kb, cb in b_items:
                terms[kb] = get(kb, 0) + ca * cb
            continue
        for kb, cb in b_items:
            key = tuple(sorted(ka + kb))
            terms[key] = get(key, 0) + ca * cb


# ===== Polynomials =====


class CharPoly:
    """Immutable integer polynomial in d-symbols for a fixed (m|n) signature."""

    __slots__ = ("_m", "_n", "_terms", "_hash")

    def __init__(self, m: int, n: int, terms: Mapping[Monomial, int] | None = None) -> None:
        if m < 0 or n < 0:
            raise ValueError("signature entries must be nonnegative")
        self._m = m
        self._n = n
        collected: dict[Symbols, int] = {}
        for mono, c in (terms or {}).items():
            key = mono.symbols
            collected[key] = collected.get(key, 0) + c
        self._terms = {key: c for key, c in collected.items() if c}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict[Symbols, int]) -> "CharPoly":
        poly = cls.__new__(cls)
        poly._m = m
        poly._n = n
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, m: int, n: int) -> "CharPoly":
        return cls._raw(m, n, {})

    @classmethod
    def one(cls, m: int, n: int) -> "CharPoly":
        return cls._raw(m, n, {(): 1})

    @classmethod
    def constant(cls, k: int, m: int, n: int) -> "CharPoly":
        return cls._raw(m, n, {(): k} if k else {})

    @classmethod
    def symbol(cls, i: int, c: Rat, m: int, n: int) -> "CharPoly":
        if not 1 <= i <= m + n:
            raise ValueError(f"symbol index {i} outside 1..{m + n}")
        return cls._raw(m, n, {(DSymbol(i, c),): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, m: int, n: int, coeff: int = 1) -> "CharPoly":
        return cls._raw(m, n, {mono.symbols: coeff} if coeff else {})

    # ===== Accessors =====

    @property
    def m(self) -> int:
        return self._m

    @property
    def n(self) -> int:
        return self._n

    @property
    def signature(self) -> tuple[int, int]:
        return (self._m, self._n)

    def _monomial(self, key: Symbols) -> Monomial:
        return Monomial.from_symbols(key, self._m)

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType({self._monomial(key): c for key, c in self._terms.items()})

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return (self._monomial(key) for key in self._terms)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono.symbols, 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: t[0].key, reverse=True)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key, coeff = max(self._terms.items(), key=lambda t: _grlex_key(_factors_of(t[0])))
        return self._monomial(key), coeff

    @property
    def degree(self) -> int:
        return max((len(key) for key in self._terms), default=-1)

    # ===== Arithmetic =====

    def _check(self, other: "CharPoly") -> None:
        if self.signature != other.signature:
            raise SignatureMismatch(f"signatures differ: {self.signature} vs {other.signature}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == CharPoly.constant(other, self._m, self._n)
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.signature == other.signature and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._m, self._n, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other: "CharPoly | int") -> "CharPoly":
        if isinstance(other, int):
            other = CharPoly.constant(other, self._m, self._n)
        self._check(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for key, c in other._terms.items():
            total = terms.get(key, 0) + c
            if total:
                terms[key] = total
            else:
                del terms[key]
        return CharPoly._raw(self._m, self._n, terms)

    __radd__ = __add__

    def __neg__(self) -> "CharPoly":
        return CharPoly._raw(self._m, self._n, {key: -c for key, c in self._terms.items()})

    def __sub__(self, other: "CharPoly | int") -> "CharPoly":
        if isinstance(other, int):
            other = CharPoly.constant(other, self._m, self._n)
        self._check(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            total = terms.get(key, 0) - c
            if total:
                terms[key] = total
            else:
                del terms[key]
        return CharPoly._raw(self._m, self._n, terms)

    def __rsub__(self, other: int) -> "CharPoly":
        return (-self) + other

    def __mul__(self, other: "CharPoly | int") -> "CharPoly":
        if isinstance(other, int):
            if not other:
                return CharPoly.zero(self._m, self._n)
            return CharPoly._raw(self._m, self._n, {key: c * other for key, c in self._terms.items()})
        self._check(other)
        terms: dict[Symbols, int] = {}
        _add_product(terms, self._terms, other._terms, 1)
        return CharPoly._raw(self._m, self._n, {key: c for key, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CharPoly":
        if exponent < 0:
            raise ValueError("negative power of a CharPoly")
        result = CharPoly.one(self._m, self._n)
        for _ in range(exponent):
            result = result * self
        return result

    def exquo(self, den: "CharPoly") -> "CharPoly":
        """Exact quotient by leading-term reduction; NotDivisible on a remainder."""
        self._check(den)
        if not den:
            raise ZeroDivisionError("division by the zero CharPoly")
        lead_mono, lead_coeff = den.leading_term()
        quotient: dict[Symbols, int] = {}
        rest = self
        while rest:
            mono, coeff = rest.leading_term()
            q_mono = mono.divide(lead_mono)
            if q_mono is None or coeff % lead_coeff:
                raise NotDivisible(
                    f"leading term {mono.to_text(coeff)} not divisible by {lead_mono.to_text(lead_coeff)}"
                )
            q_key, q_coeff = q_mono.symbols, coeff // lead_coeff
            quotient[q_key] = quotient.get(q_key, 0) + q_coeff
            rest = rest - CharPoly._raw(self._m, self._n, {q_key: q_coeff}) * den
        return CharPoly._raw(self._m, self._n, {key: c for key, c in quotient.items() if c})

    def shift(self, w: Rat) -> "CharPoly":
        w = exact_shift(w)
        if not w:
            return self
        # a common shift keeps the symbol order
        return CharPoly._raw(
            self._m,
            self._n,
            {tuple(DSymbol(s[0], s[1] + w) for s in key): c for key, c in self._terms.items()},
        )

    def signed(self) -> "CharPoly":
        m = self._m
        return CharPoly._raw(
            self._m,
            self._n,
            {key: -c if _odd_count(key, m) else c for key, c in self._terms.items()},
        )

    # ===== Serialization =====

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " ".join(mono.to_text(c) for mono, c in self.sorted_terms())

    __str__ = to_text

    def __repr__(self) -> str:
        return f"CharPoly(m={self._m}, n={self._n}, {self.to_text()})"

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self._m,
            "n": self._n,
            "terms": [mono.to_json(c) for mono, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: Mapping[str, Any]) -> "CharPoly":
        try:
            m, n = int(obj["m"]), int(obj["n"])
            terms: dict[Monomial, int] = {}
            for term in obj["terms"]:
                counts: dict[DSymbol, int] = {}
                for f in term["factors"]:
                    s = DSymbol(int(f["i"]), parse_rat(f["c"]))
                    counts[s] = counts.get(s, 0) + int(f["e"])
                mono = Monomial.build(counts, m)
                if mono.parity != int(term["parity"]):
                    raise ParseError(f"stored parity {term['parity']} disagrees with factors")
                terms[mono] = terms.get(mono, 0) + int(term["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed CharPoly JSON: {exc}") from exc
        return cls(m, n, terms)

    @classmethod
    def from_text(cls, text: str, m: int, n: int) -> "CharPoly":
        text = text.strip()
        if text == "0":
            return cls.zero(m, n)
        terms: dict[Monomial, int] = {}
        pos = 0
        for match in _TERM_RE.finditer(text):
            if text[pos : match.start()].strip():
                raise ParseError(f"unexpected text at offset {pos}: {text[pos:match.start()]!r}")
            pos = match.end()
            coeff = int(match.group("coeff"))
            counts: dict[DSymbol, int] = {}
            for f in _FACTOR_RE.finditer(match.group("factors") or ""):
                s = DSymbol(int(f.group("i")), parse_rat(f.group("c")))
                counts[s] = counts.get(s, 0) + int(f.group("e") or 1)
            mono = Monomial.build(counts, m)
            terms[mono] = terms.get(mono, 0) + coeff
        if text[pos:].strip() or not terms:
            raise ParseError(f"cannot parse CharPoly text: {text!r}")
        return cls(m, n, terms)


_FACTOR_PATTERN = r"d\[(?P<i>\d+);(?P<c>-?\d+(?:/\d+)?)\](?:\^(?P<e>\d+))?"
_FACTOR_RE = re.compile(_FACTOR_PATTERN)
_TERM_RE = re.compile(r"(?P<coeff>[+-]\d+)(?P<factors>(?: \* d\[\d+;-?\d+(?:/\d+)?\](?:\^\d+)?)*)")


# ===== Module-level operations =====


def poly_mul(a: CharPoly, b: CharPoly) -> CharPoly:
    return a * b


def poly_div_exact(num: CharPoly, den: CharPoly) -> CharPoly:
    return num.exquo(den)


def poly_shift(p: CharPoly, w: Union[int, Fraction]) -> CharPoly:
    return p.shift(w)


def signed_view(p: CharPoly) -> CharPoly:
    return p.signed()


def poly_sum(polys: Iterable[CharPoly], m: int, n: int) -> CharPoly:
    terms: dict[Symbols, int] = {}
    get = terms.get
    for p in polys:
        if p.signature != (m, n):
            raise SignatureMismatch(f"signatures differ: {(m, n)} vs {p.signature}")
        for key, c in p._terms.items():
            terms[key] = get(key, 0) + c
    return CharPoly._raw(m, n, {key: c for key, c in terms.items() if c})


def poly_combination(products: Iterable[tuple[int, CharPoly, CharPoly]], m: int, n: int) -> CharPoly:
    """Return the sum of ``scale * a * b`` over the triples, accumulated in one pass."""
    terms: dict[Symbols, int] = {}
    for scale, a, b in products:
        if a.signature != (m, n) or b.signature != (m, n):
            raise SignatureMismatch(f"signatures differ: {(m, n)} vs {a.signature}, {b.signature}")
        _add_product(terms, a._terms, b._terms, scale)
    return CharPoly._raw(m, n, {key: c for key, c in terms.items() if c})


def eval_lweight(mono: Monomial, m: int, n: int) -> tuple[RatFunc, ...]:
    """Return the l-weight components of a monomial as rational functions in u.

    Component j is the product over factors D(j, c)^e of
    ``(1 + 1/(u + c + kappa_j)) ** (s_j * e)``.
    """
    components = [RatFunc.one() for _ in range(m + n)]
    for s, e in mono.factors:
        j = s.index
        if not 1 <= j <= m + n:
            raise ValueError(f"symbol index {j} outside 1..{m + n}")
        base = RatFunc.linear(s.shift + kappa(j, m) + 1) / RatFunc.linear(s.shift + kappa(j, m))
        components[j - 1] = components[j - 1] * base ** (symbol_sign(j, m) * e)
    return tuple(components)
