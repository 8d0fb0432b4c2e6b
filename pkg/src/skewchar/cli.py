"""Command line entry point.

Every subcommand prints a rich rendering by default and canonical JSON with
``--json``. Exit codes: 0 when everything verified, 1 on an identity
mismatch, 2 on a usage, shape or parse error.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import ValidationError

from skewchar.bethe import run_bethe
from skewchar.characters import (
    central_eigenvalue,
    check_divisibility_S,
    check_divisibility_W,
    leading_monomial,
    parity_histogram,
    q_character,
    weight_of,
)
from skewchar.config import Settings, load_settings
from skewchar.core_ring import parse_rat
from skewchar.diagrams import Partition, SkewDiagram, is_prime
from skewchar.diffops import default_order, verify_center_ratio, verify_ratio
from skewchar.exceptions import (
    IdentityMismatch,
    MonomialMismatch,
    NoUniqueLeading,
    ParseError,
    SkewcharError,
    UsageError,
)
from skewchar.fusion import fusion_rank_report
from skewchar.jacobi_trudi import jt_symbols_A, jt_symbols_S, verify_jt
from skewchar.logging_utils import RUN_ID_CTX, configure_logging, new_run_id
from skewchar.models import BetheInput, CharacterSummary, CheckResult, DiagramEcho, VerificationReport
from skewchar.output import (
    console,
    emit_json,
    err_console,
    show_bethe,
    show_character,
    show_fusion,
    show_report,
    show_suite,
    show_table,
)
from skewchar.suite import CASES, run_suite
from skewchar.tableaux import count_ssyt, enumerate_ssyt, lgv_tuples, tuple_to_tableau
from skewchar.tsystems import verify_classical_tsystem, verify_extended_tsystem, verify_nonprime_factorization

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Settings], int]


# ===== Argument helpers =====


def _signature(args: argparse.Namespace) -> tuple[int, int]:
    m, n = args.m, args.n
    if m < 0 or n < 0:
        raise UsageError(f"--m and --n must be nonnegative, got ({m}|{n})")
    if m + n == 0:
        raise UsageError("gl(0|0) has no letters; pass --m or --n >= 1")
    return m, n


def _diagram(args: argparse.Namespace) -> SkewDiagram:
    lam = Partition.parse(args.lam)
    mu = Partition.parse(args.mu or "")
    return SkewDiagram(lam, mu, parse_rat(args.anchor))


def _exit_code(passed: bool) -> int:
    return 0 if passed else 1


def _emit(args: argparse.Namespace, payload: Any, render: Callable[[], None]) -> None:
    if args.json:
        emit_json(payload)
    else:
        render()


def _finish(args: argparse.Namespace, report: VerificationReport) -> int:
    _emit(args, report, lambda: show_report(report))
    return _exit_code(report.passed)


# ===== Commands =====


def cmd_tableaux(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    d = _diagram(args)
    settings.check_caps(boxes=d.size, rank=m + n, force=args.force)
    if args.mode == "list":
        rows = [t.to_bracket() for t in enumerate_ssyt(d, m, n)]
        if args.json:
            emit_json({"diagram": DiagramEcho.from_diagram(d).model_dump(mode="json"), "tableaux": rows})
        else:
            for row in rows:
                console.out(row, highlight=False)
        return 0
    if args.mode == "lgv":
        tableaux = {t.entries for t in enumerate_ssyt(d, m, n)}
        images = [tuple_to_tableau(t).entries for t in lgv_tuples(d.lam, d.mu, m, n)]
        report = VerificationReport(name="lgv", stats={"diagram": str(d), "m": m, "n": n, "paths": len(images)})
        if len(images) == len(tableaux):
            report.add(CheckResult.ok("path tuples = tableaux", f"{len(images)} of each"))
        else:
            report.add(CheckResult.failed("path tuples = tableaux", f"{len(images)} tuples, {len(tableaux)} tableaux"))
        if set(images) == tableaux and len(set(images)) == len(images):
            report.add(CheckResult.ok("bijection"))
        else:
            report.add(CheckResult.failed("bijection", "path tuples do not map one to one onto the tableaux"))
        return _finish(args, report)
    count = count_ssyt(d, m, n)
    _emit(
        args,
        {"diagram": DiagramEcho.from_diagram(d).model_dump(mode="json"), "m": m, "n": n, "count": count},
        lambda: console.print(f"{d} in gl({m}|{n}): {count} tableaux", highlight=False),
    )
    return 0


def cmd_qchar(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    d = _diagram(args)
    settings.check_caps(boxes=d.size, rank=m + n, force=args.force)
    character = q_character(d, m, n)
    try:
        leading = weight_of(leading_monomial(character), m, n).to_json()
    except (NoUniqueLeading, ValueError):
        leading = None
    summary = CharacterSummary(
        diagram=DiagramEcho.from_diagram(d),
        m=m,
        n=n,
        monomials=len(character),
        leading_weight=leading,
        parity_histogram={str(k): v for k, v in parity_histogram(character).items()},
        character=character.to_json(),
    )
    _emit(args, summary, lambda: show_character(summary, character.to_text()))
    return 0


def cmd_jt_verify(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    lam, mu = Partition.parse(args.lam), Partition.parse(args.mu or "")
    settings.check_caps(boxes=lam.size - mu.size, rank=m + n, force=args.force)
    report = verify_jt(lam, mu, m, n, strict=False)
    if not args.emit_matrix:
        return _finish(args, report)
    matrices = {
        "S": [[e.label() for e in row] for row in jt_symbols_S(lam, mu)],
        "A": [[e.label() for e in row] for row in jt_symbols_A(lam, mu)],
    }
    if args.json:
        emit_json({"report": report.model_dump(mode="json"), "matrices": matrices})
    else:
        for kind, rows in matrices.items():
            size = len(rows)
            show_table(f"{kind} matrix", [str(j) for j in range(1, size + 1)], rows)
        show_report(report)
    return _exit_code(report.passed)


def cmd_divisibility(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    part = Partition.parse(args.lam)
    settings.check_caps(boxes=part.size + m * n, rank=m + n, force=args.force)
    check = check_divisibility_W if args.kind == "W" else check_divisibility_S
    quotient = check(part, m, n)
    report = VerificationReport(
        name=f"divisibility-{args.kind}",
        stats={"partition": str(part), "m": m, "n": n, "quotient_terms": len(quotient)},
    )
    report.add(CheckResult.ok("quotient", f"{len(quotient)} monomials"))
    return _finish(args, report)


def cmd_central_check(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    d = _diagram(args)
    settings.check_caps(boxes=d.size, rank=m + n, force=args.force)
    character = q_character(d, m, n)
    report = VerificationReport(name="central-eigenvalue", stats={"diagram": str(d), "m": m, "n": n})
    try:
        value = central_eigenvalue(character, d)
        report.stats["eigenvalue"] = str(value)
        report.add(CheckResult.ok("common eigenvalue", f"{len(character)} monomials"))
    except MonomialMismatch as exc:
        counterexample = exc.monomial.to_text(1) if exc.monomial is not None else None
        report.add(CheckResult.failed("common eigenvalue", str(exc), counterexample=counterexample))
    return _finish(args, report)


def cmd_tsystem(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    settings.check_caps(rank=m + n, force=args.force)
    if args.classical:
        if args.i is None or args.j is None:
            raise UsageError("--classical needs --i and --j")
        settings.check_caps(boxes=args.i * args.j, force=args.force)
        try:
            report = verify_classical_tsystem(args.i, args.j, m, n, strict=False)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return _finish(args, report)
    if args.lam is None:
        raise UsageError("pass --lambda (and --mu) or --classical")
    d = _diagram(args)
    settings.check_caps(boxes=d.size, force=args.force)
    if is_prime(d):
        report = verify_extended_tsystem(d, m, n, strict=False)
    else:
        report = verify_nonprime_factorization(d, m, n, strict=False)
    return _finish(args, report)


def cmd_ratio_verify(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    order = args.order if args.order is not None else default_order(m, n)
    settings.check_caps(rank=m + n, order=order, force=args.force)
    return _finish(args, verify_ratio(m, n, order, strict=False))


def cmd_center_ratio(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    settings.check_caps(rank=m + n, force=args.force)
    return _finish(args, verify_center_ratio(m, n, strict=False))


def cmd_fusion_rank(args: argparse.Namespace, settings: Settings) -> int:
    m, n = _signature(args)
    d = _diagram(args)
    settings.check_caps(boxes=d.size, rank=m + n, fusion_length=d.size, force=args.force)
    if d.is_empty:
        raise UsageError("fusion needs at least one box")
    report = fusion_rank_report(d, m, n, tableau=args.tableau)
    _emit(args, report, lambda: show_fusion(report))
    return _exit_code(report.match and report.weights_match)


def cmd_bethe(args: argparse.Namespace, settings: Settings) -> int:
    path = Path(args.file)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        payload = BetheInput.model_validate_json(raw)
    except ValidationError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    settings.check_caps(rank=payload.m + payload.n, order=payload.order, force=args.force)
    report = run_bethe(payload)
    _emit(args, report, lambda: show_bethe(report))
    return _exit_code(report.factorization.passed)


def cmd_suite(args: argparse.Namespace, settings: Settings) -> int:
    summary = run_suite(args.only, quick=args.quick, jobs=settings.jobs)
    _emit(args, summary, lambda: show_suite(summary))
    return _exit_code(summary.passed)


# ===== Parser =====


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print canonical JSON instead of tables.")
    common.add_argument("--force", action="store_true", help="Run even when a size cap is exceeded.")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes (overrides SKEWCHAR_JOBS).")
    common.add_argument("--log-level", default=None, help="DEBUG/INFO/WARNING/ERROR (overrides SKEWCHAR_LOG_LEVEL).")
    return common


def _add_signature(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True, help="Number of even letters.")
    p.add_argument("--n", type=int, required=True, help="Number of odd letters.")


def _add_diagram(p: argparse.ArgumentParser, *, required: bool = True) -> None:
    p.add_argument("--lambda", dest="lam", required=required, help="Outer partition, e.g. 4,3,2.")
    p.add_argument("--mu", default="", help="Inner partition, e.g. 1,1 (default empty).")
    p.add_argument("--anchor", default="0", help="Content offset z as p/q; box (i,j) has content j-i-z.")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="skewchar",
        description="Exact characters and identities for skew representations of the super Yangian Y(gl(m|n)).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("tableaux", cmd_tableaux, "Count, list or path-check semi-standard tableaux.")
    _add_diagram(p)
    _add_signature(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", dest="mode", action="store_const", const="count", help="Print the number of tableaux.")
    mode.add_argument("--list", dest="mode", action="store_const", const="list", help="Print one tableau per line.")
    mode.add_argument("--lgv", dest="mode", action="store_const", const="lgv", help="Check the lattice-path bijection.")
    p.set_defaults(mode="count")

    p = add("qchar", cmd_qchar, "Print the q-character of a skew diagram.")
    _add_diagram(p)
    _add_signature(p)

    p = add("jt-verify", cmd_jt_verify, "Verify both Jacobi-Trudi determinant formulas.")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", default="")
    _add_signature(p)
    p.add_argument("--emit-matrix", action="store_true", help="Also print the symbolic matrices.")

    p = add("divisibility", cmd_divisibility, "Divide a W or S character by the rectangle character.")
    p.add_argument("--kind", choices=["W", "S"], required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    _add_signature(p)

    p = add("central-check", cmd_central_check, "Check that every monomial gives the same central eigenvalue.")
    _add_diagram(p)
    _add_signature(p)

    p = add("tsystem", cmd_tsystem, "Verify an extended or classical T-system relation.")
    _add_diagram(p, required=False)
    _add_signature(p)
    p.add_argument("--classical", action="store_true", help="Check the rectangle relation at (i, j).")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)

    p = add("ratio-verify", cmd_ratio_verify, "Verify the Berezinian ratio decompositions.")
    _add_signature(p)
    p.add_argument("--order", type=int, default=None, help="Truncation order (default m+n+3).")

    p = add("center-ratio", cmd_center_ratio, "Verify the central series as a ratio of rectangle transfers.")
    _add_signature(p)

    p = add("fusion-rank", cmd_fusion_rank, "Compare the rank of the fusion operator with the tableau count.")
    _add_diagram(p)
    _add_signature(p)
    p.add_argument("--tableau", choices=["column", "row"], default="column")

    p = add("bethe", cmd_bethe, "Evaluate Bethe equations and the difference operator from a JSON file.")
    p.add_argument("file", help="JSON with m, n, zeta, roots and order.")

    p = add("suite", cmd_suite, "Run the acceptance grid.")
    p.add_argument("--quick", action="store_true", help="Use the reduced grid.")
    p.add_argument("--only", nargs="+", choices=list(CASES), default=None, metavar="NAME")

    return parser


# ===== Entry point =====


def _show_mismatch(args: argparse.Namespace, exc: IdentityMismatch) -> None:
    if args.json:
        emit_json(exc.report)
    else:
        show_report(exc.report)
        err_console.print(f"identity mismatch: {exc}", style="red", markup=False, highlight=False)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0 if exc.code is None else 2

    configure_logging(args.log_level)
    token = RUN_ID_CTX.set(new_run_id())
    try:
        settings = load_settings().with_jobs(args.jobs)
        code = args.handler(args, settings)
        logger.info("command done command=%s exit=%d", args.command, code)
        return code
    except IdentityMismatch as exc:
        logger.info("command failed command=%s error=%s", args.command, exc)
        _show_mismatch(args, exc)
        return 1
    except SkewcharError as exc:
        err_console.print(f"error: {exc}", style="red", markup=False, highlight=False)
        return 2
    except Exception:
        logger.exception("unexpected failure command=%s", args.command)
        raise
    finally:
        RUN_ID_CTX.reset(token)
