"""Exact super linear algebra on tensor powers of C^{m|n}.

Basis vectors of C^{m|n} are the letters 1..m+n, with letters above m odd.
Tensor words are ordered lexicographically. Operators are sparse
``DomainMatrix`` objects over ``QQ``.
"""

from __future__ import annotations

import itertools
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from skewchar.diagrams import GlWeight, SkewDiagram
from skewchar.exceptions import IllDefinedProduct, ShapeError, ZeroSpectral
from skewchar.models import DiagramEcho, FusionRankReport, WeightDim
from skewchar.tableaux import Tableau, column_tableau, count_ssyt, enumerate_ssyt, is_standard, row_tableau

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Word = tuple[int, ...]


def _qq(x: Scalar):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class TensorBasis:
    m: int
    n: int
    length: int

    def __post_init__(self) -> None:
        if self.m + self.n < 1 or self.length < 1:
            raise ValueError("tensor basis needs m+n >= 1 and length >= 1")

    @cached_property
    def words(self) -> tuple[Word, ...]:
        return tuple(itertools.product(range(1, self.m + self.n + 1), repeat=self.length))

    @cached_property
    def index(self) -> dict[Word, int]:
        return {w: k for k, w in enumerate(self.words)}

    @property
    def dim(self) -> int:
        return (self.m + self.n) ** self.length

    def is_odd(self, letter: int) -> bool:
        return letter > self.m

    def word_parity(self, word: Word) -> int:
        return sum(1 for a in word if a > self.m) % 2

    def word_weight(self, word: Word) -> GlWeight:
        counts = Counter(word)
        return GlWeight(tuple(counts.get(a, 0) for a in range(1, self.m + self.n + 1)))


@dataclass(frozen=True, eq=False)
class SuperMatrix:
    basis: TensorBasis
    matrix: DomainMatrix

    @classmethod
    def from_entries(cls, basis: TensorBasis, entries: dict[tuple[int, int], Scalar]) -> "SuperMatrix":
        rows: dict[int, dict[int, object]] = {}
        for (r, c), v in entries.items():
            if v:
                rows.setdefault(r, {})[c] = _qq(v)
        return cls(basis, DomainMatrix(rows, (basis.dim, basis.dim), QQ))

    @classmethod
    def identity(cls, basis: TensorBasis) -> "SuperMatrix":
        return cls(basis, DomainMatrix.eye(basis.dim, QQ).to_sparse())

    @classmethod
    def zero(cls, basis: TensorBasis) -> "SuperMatrix":
        return cls.from_entries(basis, {})

    def _same(self, other: "SuperMatrix") -> None:
        if self.basis != other.basis:
            raise ValueError("operators act on different tensor spaces")

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._same(other)
        return SuperMatrix(self.basis, self.matrix + other.matrix)

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._same(other)
        return SuperMatrix(self.basis, self.matrix - other.matrix)

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        self._same(other)
        return SuperMatrix(self.basis, self.matrix * other.matrix)

    def scale(self, c: Scalar) -> "SuperMatrix":
        if not Fraction(c):
            return SuperMatrix.zero(self.basis)
        return SuperMatrix(self.basis, self.matrix * _qq(c))

    def entries(self) -> dict[tuple[int, int], Fraction]:
        rep = self.matrix.to_sparse().rep
        return {(r, c): _fraction(v) for r, row in rep.items() for c, v in row.items() if v}

    def entry(self, row: Word, col: Word) -> Fraction:
        return self.entries().get((self.basis.index[row], self.basis.index[col]), Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.basis == other.basis and (self - other).is_zero()

    def rank(self) -> int:
        return int(self.matrix.rank())

    def restricted_rank(self, columns: Sequence[int]) -> int:
        if not columns:
            return 0
        return int(self.matrix.extract(list(range(self.basis.dim)), list(columns)).rank())


# ===== Permutation operators =====


def permutation_operator(basis: TensorBasis, perm: Sequence[int]) -> SuperMatrix:
    """Move the letter in slot k to slot perm[k] (0-based), with the super sign.

    The sign is -1 for every pair of odd letters whose order is reversed.
    """
    length = basis.length
    if sorted(perm) != list(range(length)):
        raise ValueError(f"{perm} is not a permutation of 0..{length - 1}")
    inverted = [(a, b) for a, b in itertools.combinations(range(length), 2) if perm[a] > perm[b]]
    entries: dict[tuple[int, int], Scalar] = {}
    for col, word in enumerate(basis.words):
        target = [0] * length
        for k, letter in enumerate(word):
            target[perm[k]] = letter
        sign = 1
        for a, b in inverted:
            if basis.is_odd(word[a]) and basis.is_odd(word[b]):
                sign = -sign
        entries[(basis.index[tuple(target)], col)] = sign
    return SuperMatrix.from_entries(basis, entries)


def transposition(basis: TensorBasis, i: int, j: int) -> SuperMatrix:
    """Super transposition P_ij of slots i and j (1-based)."""
    if not (1 <= i <= basis.length and 1 <= j <= basis.length) or i == j:
        raise ValueError(f"invalid slot pair ({i}, {j}) for length {basis.length}")
    perm = list(range(basis.length))
    perm[i - 1], perm[j - 1] = j - 1, i - 1
    return permutation_operator(basis, perm)


def super_flip(basis: TensorBasis, pos: int) -> SuperMatrix:
    return transposition(basis, pos, pos + 1)


def r_matrix(basis: TensorBasis, i: int, j: int, u: Scalar) -> SuperMatrix:
    """R_ij(u) = 1 - P_ij / u."""
    u = Fraction(u)
    if u == 0:
        raise ZeroSpectral(f"R_{i}{j} requested at u = 0")
    return SuperMatrix.identity(basis) - transposition(basis, i, j).scale(1 / u)


def _symmetrize(basis: TensorBasis, *, signed: bool) -> SuperMatrix:
    length = basis.length
    total = SuperMatrix.zero(basis)
    for perm in itertools.permutations(range(length)):
        term = permutation_operator(basis, perm)
        if signed and sum(1 for a, b in itertools.combinations(perm, 2) if a > b) % 2:
            total = total - term
        else:
            total = total + term
    return total.scale(Fraction(1, math.factorial(length)))


def antisymmetrizer(m: int, n: int, k: int) -> SuperMatrix:
    return _symmetrize(TensorBasis(m, n, k), signed=True)


def symmetrizer(m: int, n: int, k: int) -> SuperMatrix:
    return _symmetrize(TensorBasis(m, n, k), signed=False)


def reversal_operator(m: int, n: int, length: int) -> SuperMatrix:
    """Reverse the order of the tensor factors."""
    return permutation_operator(TensorBasis(m, n, length), [length - 1 - k for k in range(length)])


# ===== Fusion =====


def staircase_word(length: int) -> list[int]:
    """Reduced word (s1)(s2 s1)(s3 s2 s1)... of the order-reversing permutation."""
    return [a for j in range(1, length) for a in range(j, 0, -1)]


def reduced_words(length: int) -> list[list[int]]:
    """All reduced words of the order-reversing permutation."""
    target = length * (length - 1) // 2
    out: list[list[int]] = []

    def walk(w: list[int], word: list[int]) -> None:
        if len(word) == target:
            out.append(word)
            return
        for a in range(1, length):
            if w[a - 1] < w[a]:
                nxt = list(w)
                nxt[a - 1], nxt[a] = nxt[a], nxt[a - 1]
                walk(nxt, word + [a])

    walk(list(range(1, length + 1)), [])
    return out


def inversion_pairs(word: Sequence[int], length: int) -> list[tuple[int, int]]:
    """Slot pairs swapped along the word, read left to right."""
    w = list(range(1, length + 1))
    pairs = []
    for a in word:
        if not 1 <= a < length:
            raise ValueError(f"s_{a} is not a simple transposition of {length} letters")
        p, q = w[a - 1], w[a]
        if p > q:
            raise ValueError(f"word {list(word)} is not reduced")
        pairs.append((p, q))
        w[a - 1], w[a] = q, p
    if len(pairs) != length * (length - 1) // 2:
        raise ValueError(f"word {list(word)} does not reverse {length} letters")
    return pairs


def tableau_contents(omega: Tableau) -> list[Fraction]:
    """c_k = content of the box holding k."""
    if not is_standard(omega):
        raise ShapeError(f"{omega.to_bracket()} is not a standard tableau")
    by_entry = {v: omega.diagram.content(box) for box, v in omega.as_dict().items()}
    return [by_entry[k] for k in range(1, len(by_entry) + 1)]


def _consecutive_product(basis: TensorBasis, contents: Sequence[Fraction]) -> SuperMatrix:
    """Evaluate prod R_ij(u_i - u_j) at u_1 = c_1, u_2 = c_2, ... one variable at a time.

    At stage j the pairs (i, j), i < j, are multiplied in with u_j = c_j + eps;
    the product is kept as a polynomial in eps truncated at the number of
    vanishing differences, whose lower coefficients must cancel.
    """
    identity = SuperMatrix.identity(basis)
    result = identity
    for j in range(2, basis.length + 1):
        diffs = [(i, contents[i - 1] - contents[j - 1]) for i in range(1, j)]
        poles = sum(1 for _, d in diffs if d == 0)
        coeffs = [result] + [SuperMatrix.zero(basis)] * poles
        for i, d in diffs:
            step = identity.scale(d) - transposition(basis, i, j)
            coeffs = [coeffs[0] @ step] + [coeffs[k] @ step - coeffs[k - 1] for k in range(1, poles + 1)]
        for k in range(poles):
            if not coeffs[k].is_zero():
                raise IllDefinedProduct(f"pole of order {poles - k} survives at stage {j}")
        denominator = Fraction(-1) ** poles
        for _, d in diffs:
            if d:
                denominator *= d
        result = coeffs[poles].scale(1 / denominator)
    return result


def fusion_operator(
    omega: Tableau, m: int, n: int, *, word: Optional[Sequence[int]] = None
) -> SuperMatrix:
    """Ordered product of R_ij(c_i - c_j) over the slot pairs of a reduced word.

    Without ``word`` the staircase order is used and coinciding contents are
    resolved by consecutive evaluation. With an explicit word the factors are
    evaluated directly.
    """
    started = time.perf_counter()
    contents = tableau_contents(omega)
    basis = TensorBasis(m, n, len(contents))
    if word is None:
        result = _consecutive_product(basis, contents)
    else:
        result = SuperMatrix.identity(basis)
        for i, j in inversion_pairs(word, basis.length):
            d = contents[i - 1] - contents[j - 1]
            if d == 0:
                raise IllDefinedProduct(f"factor R_{i}{j} has zero content difference")
            result = result @ r_matrix(basis, i, j, d)
    logger.debug(
        "fusion operator built tableau=%s m=%d n=%d duration_ms=%d",
        omega.to_bracket(),
        m,
        n,
        int((time.perf_counter() - started) * 1000),
    )
    return result


def rank(a: SuperMatrix) -> int:
    return a.rank()


def weight_space_dims(a: SuperMatrix) -> dict[GlWeight, int]:
    """Dimensions of the weight spaces of the image of a weight-preserving operator."""
    by_weight: dict[GlWeight, list[int]] = {}
    for k, w in enumerate(a.basis.words):
        by_weight.setdefault(a.basis.word_weight(w), []).append(k)
    dims = {}
    for weight, columns in by_weight.items():
        dim = a.restricted_rank(columns)
        if dim:
            dims[weight] = dim
    return dims


# ===== Super trace and transpose =====


def supertrace(a: SuperMatrix) -> Fraction:
    total = Fraction(0)
    entries = a.entries()
    for k, w in enumerate(a.basis.words):
        value = entries.get((k, k))
        if value:
            total += -value if a.basis.word_parity(w) else value
    return total


def supertranspose(a: SuperMatrix) -> SuperMatrix:
    """E_ij -> (-1)^(|i||j| + |j|) E_ji on a single copy of C^{m|n}."""
    if a.basis.length != 1:
        raise ValueError("supertranspose is defined here for a single tensor factor")
    out: dict[tuple[int, int], Scalar] = {}
    for (r, c), v in a.entries().items():
        pi, pj = int(a.basis.is_odd(r + 1)), int(a.basis.is_odd(c + 1))
        out[(c, r)] = -v if (pi * pj + pj) % 2 else v
    return SuperMatrix.from_entries(a.basis, out)


def parity_of(a: SuperMatrix) -> Optional[int]:
    """Z/2 degree of a homogeneous operator; None for a mixed one, 0 for zero."""
    words = a.basis.words
    parities = {(a.basis.word_parity(words[r]) + a.basis.word_parity(words[c])) % 2 for r, c in a.entries()}
    if len(parities) > 1:
        return None
    return parities.pop() if parities else 0


def matrix_unit(basis: TensorBasis, i: int, j: int) -> SuperMatrix:
    """E_ij on a single copy of C^{m|n} (1-based letters)."""
    if basis.length != 1:
        raise ValueError("matrix units are defined here for a single tensor factor")
    return SuperMatrix.from_entries(basis, {(i - 1, j - 1): 1})


# ===== Reports =====


def _tableau(d: SkewDiagram, kind: str) -> Tableau:
    if kind == "column":
        return column_tableau(d)
    if kind == "row":
        return row_tableau(d)
    raise ValueError(f"unknown tableau kind {kind!r}")


def fusion_rank_report(d: SkewDiagram, m: int, n: int, *, tableau: str = "column") -> FusionRankReport:
    """Compare rank and weight spaces of the fusion image with the tableau count."""
    started = time.perf_counter()
    omega = _tableau(d, tableau)
    op = fusion_operator(omega, m, n)
    op_rank = op.rank()
    expected = count_ssyt(d, m, n)
    dims = weight_space_dims(op)
    tableau_weights = Counter(t.weight(m, n) for t in enumerate_ssyt(d, m, n))
    logger.info(
        "fusion rank done diagram=%s m=%d n=%d rank=%d ssyt=%d duration_ms=%d",
        d,
        m,
        n,
        op_rank,
        expected,
        int((time.perf_counter() - started) * 1000),
    )
    return FusionRankReport(
        diagram=DiagramEcho.from_diagram(d),
        m=m,
        n=n,
        tableau=omega.rows(),
        rank=op_rank,
        ssyt_count=expected,
        match=op_rank == expected,
        weight_dims=[WeightDim(weight=w.to_json(), dim=k) for w, k in sorted(dims.items(), key=lambda t: t[0].coords, reverse=True)],
        weights_match=dims == dict(tableau_weights),
    )
