"""Acceptance grid: one named case per family of identities.

Each case returns the number of instances it checked and raises on the first
failure. ``run_suite`` runs the cases in order, optionally in worker
processes, and collects a ``SuiteSummary``.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

from skewchar.bethe import BetheData, verify_bethe_operator
from skewchar.characters import (
    central_eigenvalue,
    check_divisibility_S,
    check_divisibility_W,
    leading_monomial,
    q_character,
    weight_of,
)
from skewchar.diagrams import (
    Partition,
    SkewDiagram,
    build_xi,
    contains_rectangle,
    irreducibility_condition,
    iter_hooks,
    iter_partitions,
    iter_skew_shapes,
    natural_weight,
)
from skewchar.diffops import default_order, verify_berezinian_expansion, verify_center_ratio, verify_ratio
from skewchar.exceptions import IdentityMismatch, SkewcharError
from skewchar.fusion import (
    TensorBasis,
    fusion_operator,
    fusion_rank_report,
    r_matrix,
    reduced_words,
)
from skewchar.jacobi_trudi import verify_jt
from skewchar.logging_utils import RUN_ID_CTX
from skewchar.models import CheckResult, SuiteCaseResult, SuiteSummary, VerificationReport
from skewchar.ratfunc import RatFunc
from skewchar.tableaux import column_tableau, count_ssyt, lgv_tuples, row_tableau
from skewchar.tsystems import (
    iter_nonprime_diagrams,
    iter_prime_diagrams,
    verify_classical_tsystem,
    verify_extended_tsystem,
    verify_nonprime_factorization,
)

logger = logging.getLogger(__name__)

SEED = 20240607


def _expect(case: str, ok: bool, detail: str) -> None:
    if not ok:
        raise IdentityMismatch(VerificationReport.single(case, CheckResult.failed(case, detail)))


def _signatures(low: int, high: int) -> list[tuple[int, int]]:
    return [(m, n) for m in range(low, high + 1) for n in range(low, high + 1)]


# ===== Cases =====


def case_jacobi_trudi(quick: bool) -> int:
    count = 0
    max_boxes = 5 if quick else 8
    signatures = [(1, 1), (2, 2)] if quick else _signatures(1, 2)
    for d in iter_skew_shapes(max_boxes):
        for m, n in signatures:
            verify_jt(d.lam, d.mu, m, n)
            count += 1
    return count


def case_vanishing(quick: bool) -> int:
    count = 0
    for m, n in [(1, 1)] if quick else _signatures(1, 2):
        for k in range(1, 4):
            lam = Partition((n + 1,) * (m + k))
            mu = Partition((n,) * (k - 1))
            verify_jt(lam, mu, m, n)
            count += 1
    target = 5 if quick else 20
    for d in iter_skew_shapes(6 if quick else 8, min_boxes=4):
        if count >= target:
            break
        if contains_rectangle(d, 2, 2):
            verify_jt(d.lam, d.mu, 1, 1)
            count += 1
    return count


def case_dimension(quick: bool) -> int:
    count = 0
    for m, n in _signatures(1, 2 if quick else 3):
        found = count_ssyt(build_xi(m, n), m, n)
        _expect("dimension", found == 2 ** (m * n), f"({m}|{n}) rectangle has {found} tableaux")
        count += 1
    return count


def case_lgv(quick: bool) -> int:
    count = 0
    for d in iter_skew_shapes(5 if quick else 8):
        for m, n in [(1, 1)] if quick else _signatures(1, 2):
            paths = sum(1 for _ in lgv_tuples(d.lam, d.mu, m, n))
            tableaux = count_ssyt(d, m, n)
            _expect("lgv", paths == tableaux, f"{d} ({m}|{n}): {paths} path tuples, {tableaux} tableaux")
            count += 1
    return count


def case_divisibility(quick: bool) -> int:
    count = 0
    max_boxes = 3 if quick else 6
    for m, n in _signatures(1, 2 if quick else 3):
        for size in range(0, max_boxes + 1):
            for p in iter_partitions(size):
                if p.length <= m:
                    check_divisibility_W(p, m, n)
                    count += 1
                if p.part(1) <= n:
                    check_divisibility_S(p, m, n)
                    count += 1
    return count


def case_central(quick: bool) -> int:
    count = 0
    for m, n in [(1, 1)] if quick else _signatures(1, 2):
        for lam in iter_hooks(4 if quick else 6, m, n):
            d = SkewDiagram.straight(lam)
            character = q_character(d, m, n)
            central_eigenvalue(character, d)
            lead = weight_of(leading_monomial(character), m, n)
            _expect("central", lead == natural_weight(lam, m, n), f"{lam} ({m}|{n}) leads with {lead.label()}")
            count += 1
    return count


def case_berezinian(quick: bool) -> int:
    pairs = [(1, 1)] if quick else [(m, n) for m in range(3) for n in range(3) if m + n]
    for m, n in pairs:
        verify_berezinian_expansion(m, n, 3 if quick else 5)
    return len(pairs)


def case_ratio(quick: bool) -> int:
    pairs = [(1, 0), (0, 1), (1, 1)] if quick else [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)]
    for m, n in pairs:
        verify_ratio(m, n, default_order(m, n))
    return len(pairs)


def case_center_ratio(quick: bool) -> int:
    pairs = [(1, 1)] if quick else _signatures(1, 2)
    for m, n in pairs:
        verify_center_ratio(m, n)
    return len(pairs)


def case_tsystem(quick: bool) -> int:
    count = 0
    signatures = [(1, 1)] if quick else _signatures(1, 2)
    for m, n in signatures:
        for i, j in itertools.product(range(4), repeat=2):
            if i or j:
                verify_classical_tsystem(i, j, m, n)
                count += 1
        for d in iter_prime_diagrams(5 if quick else 8, 2, 4):
            verify_extended_tsystem(d, m, n)
            count += 1
    for d in itertools.islice(iter_nonprime_diagrams(5), 10):
        verify_nonprime_factorization(d, 1, 1)
        count += 1
    return count


def case_fusion(quick: bool) -> int:
    count = 0
    signatures = [(1, 1)] if quick else [(m, n) for m in range(4) for n in range(4) if 1 <= m + n <= 3]
    for d in iter_skew_shapes(3 if quick else 4):
        for m, n in signatures:
            report = fusion_rank_report(d, m, n)
            _expect("fusion", report.match, f"{d} ({m}|{n}): rank {report.rank}, {report.ssyt_count} tableaux")
            _expect("fusion", report.weights_match, f"{d} ({m}|{n}): weight spaces differ from tableau weights")
            count += 1
            if d.size <= 3:
                for omega in (column_tableau(d), row_tableau(d)):
                    words = reduced_words(d.size)
                    reference = fusion_operator(omega, m, n, word=words[0])
                    for word in words[1:]:
                        _expect("fusion", fusion_operator(omega, m, n, word=word) == reference, f"{d} word {word}")
    rng = random.Random(SEED)
    for m, n, u in yang_baxter_triples(rng, 10 if quick else 100):
        _expect("yang-baxter", check_yang_baxter(m, n, u), f"({m}|{n}) u={list(u)}")
        count += 1
    return count


YANG_BAXTER_SIGNATURES = [(m, n) for m in range(4) for n in range(4) if 1 <= m + n <= 3]


def yang_baxter_triples(
    rng: random.Random, count: int
) -> Iterator[tuple[int, int, tuple[Fraction, Fraction, Fraction]]]:
    """Yield ``count`` draws of pairwise distinct spectral parameters.

    Signatures cycle through every (m, n) with 1 <= m + n <= 3; draws with a
    repeated parameter are redrawn and not counted.
    """
    produced = 0
    while produced < count:
        u = (
            Fraction(rng.randint(-20, 20), rng.randint(1, 7)),
            Fraction(rng.randint(-20, 20), rng.randint(1, 7)),
            Fraction(rng.randint(-20, 20), rng.randint(1, 7)),
        )
        if len(set(u)) < 3:
            continue
        m, n = YANG_BAXTER_SIGNATURES[produced % len(YANG_BAXTER_SIGNATURES)]
        yield m, n, u
        produced += 1


def check_yang_baxter(m: int, n: int, u: tuple[Fraction, Fraction, Fraction]) -> bool:
    basis = TensorBasis(m, n, 3)
    r12 = r_matrix(basis, 1, 2, u[0] - u[1])
    r13 = r_matrix(basis, 1, 3, u[0] - u[2])
    r23 = r_matrix(basis, 2, 3, u[1] - u[2])
    return r12 @ r13 @ r23 == r23 @ r13 @ r12


def random_bethe_data(rng: random.Random, m: int, n: int) -> BetheData:
    def small() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    zeta = tuple(
        RatFunc.from_roots([small() for _ in range(rng.randint(0, 2))])
        / RatFunc.from_roots([small() for _ in range(rng.randint(0, 2))])
        * (rng.randint(1, 5))
        for _ in range(m + n)
    )
    roots = tuple(tuple(small() for _ in range(rng.randint(0, 2))) for _ in range(m + n - 1))
    return BetheData(m, n, zeta, roots)


def case_bethe(quick: bool) -> int:
    rng = random.Random(SEED)
    total = 10 if quick else 100
    for _ in range(total):
        m, n = rng.choice([(1, 1), (2, 1), (1, 2), (2, 2)])
        verify_bethe_operator(random_bethe_data(rng, m, n), rng.randint(1, 3 if quick else 6))
    return total


def case_irreducibility(quick: bool) -> int:
    two = Partition((2,))
    for d in range(-6, 7):
        expected = abs(d) not in (1, 2)
        _expect("irreducibility", irreducibility_condition(two, two, d, 0) == expected, f"(2),(2) at z-w={d}")
    _expect("irreducibility", irreducibility_condition(two, two, Fraction(1, 2), 0), "(2),(2) at z-w=1/2")
    rng = random.Random(SEED)
    samples = 10 if quick else 50
    for _ in range(samples):
        size = rng.randint(1, 8)
        lam = rng.choice(list(iter_partitions(size)))
        z = Fraction(rng.randint(-5, 5))
        _expect("irreducibility", irreducibility_condition(lam, lam, z, z), f"{lam} with z=w")
    return 14 + samples


CASES: dict[str, Callable[[bool], int]] = {
    "jacobi-trudi": case_jacobi_trudi,
    "vanishing": case_vanishing,
    "dimension": case_dimension,
    "lgv": case_lgv,
    "divisibility": case_divisibility,
    "central": case_central,
    "berezinian": case_berezinian,
    "ratio": case_ratio,
    "center-ratio": case_center_ratio,
    "tsystem": case_tsystem,
    "fusion": case_fusion,
    "bethe": case_bethe,
    "irreducibility": case_irreducibility,
}


def run_case(name: str, quick: bool) -> SuiteCaseResult:
    token = RUN_ID_CTX.set(name)
    started = time.perf_counter()
    try:
        cases = CASES[name](quick)
        failure = None
    except SkewcharError as exc:
        logger.warning("suite case failed case=%s error=%s", name, exc)
        cases, failure = 0, str(exc)
    finally:
        RUN_ID_CTX.reset(token)
    duration_ms = int((time.perf_counter() - started) * 1000)
    logger.info("suite case done case=%s cases=%d failed=%s duration_ms=%d", name, cases, failure is not None, duration_ms)
    return SuiteCaseResult(name=name, passed=failure is None, cases=cases, duration_ms=duration_ms, failure=failure)


def run_suite(only: Optional[Sequence[str]] = None, *, quick: bool = False, jobs: int = 1) -> SuiteSummary:
    names = list(only) if only else list(CASES)
    unknown = [name for name in names if name not in CASES]
    if unknown:
        raise KeyError(f"unknown suite case(s): {', '.join(unknown)}")
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_case, names, [quick] * len(names)))
    else:
        results = [run_case(name, quick) for name in names]
    return SuiteSummary(passed=all(r.passed for r in results), results=results)
