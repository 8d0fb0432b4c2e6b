"""Terminal rendering with rich, and canonical JSON output."""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from pydantic import BaseModel
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from skewchar.models import (
    BetheReport,
    CharacterSummary,
    FusionRankReport,
    SuiteSummary,
    VerificationReport,
)

console = Console()
err_console = Console(stderr=True)


def canonical_json(payload: Any) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2)


def emit_json(payload: Any) -> None:
    console.out(canonical_json(payload), highlight=False)


def _verdict_style(passed: bool) -> tuple[str, str]:
    return ("green", "PASSED") if passed else ("red", "FAILED")


def show_report(report: VerificationReport) -> None:
    style, verdict = _verdict_style(report.passed)
    body = Text()
    for check in report.checks:
        mark = "ok  " if check.passed else "FAIL"
        body.append(f"{mark} {check.name}", style=None if check.passed else "bold red")
        if check.detail:
            body.append(f"  ({check.detail})", style="dim")
        if check.order is not None and not check.passed:
            body.append(f"  order={check.order}")
        if check.counterexample:
            body.append(f"\n     first monomial: {check.counterexample}", style="yellow")
        body.append("\n")
    if report.stats:
        body.append(" ".join(f"{k}={v}" for k, v in report.stats.items()), style="dim")
    console.print(Panel(body, title=f"[bold]{report.name}[/bold] {verdict}", border_style=style))


def show_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    table = Table(title=title)
    for col in columns:
        table.add_column(col)
    for row in rows:
        table.add_row(*(str(v) for v in row))
    console.print(table)


def show_character(summary: CharacterSummary, text: str) -> None:
    hist = ", ".join(f"parity {k}: {v}" for k, v in sorted(summary.parity_histogram.items()))
    lines = [
        f"monomials: {summary.monomials}",
        f"leading weight: {summary.leading_weight or '-'}",
        hist,
        "",
        text,
    ]
    console.print(Panel("\n".join(lines), title=f"q-character (m|n)=({summary.m}|{summary.n})", border_style="blue"))


def show_fusion(report: FusionRankReport) -> None:
    style, verdict = _verdict_style(report.match and report.weights_match)
    console.print(
        Panel(
            f"tableau: {report.tableau}\nrank: {report.rank}\nssyt count: {report.ssyt_count}",
            title=f"fusion rank {verdict}",
            border_style=style,
        )
    )
    show_table("weight spaces of the image", ["weight", "dim"], ((",".join(w.weight), w.dim) for w in report.weight_dims))


BETHE_COLUMNS = ["level", "index", "root", "residual"]


def show_bethe(report: BetheReport) -> None:
    show_table(
        "Bethe equation residuals",
        BETHE_COLUMNS,
        ((r.i, r.j, r.root, r.residual if r.error is None else f"error: {r.error}") for r in report.residuals),
    )
    show_report(report.factorization)


def show_suite(summary: SuiteSummary) -> None:
    table = Table(title="acceptance suite")
    for col in ("case", "instances", "ms", "result"):
        table.add_column(col)
    for result in summary.results:
        verdict = "[green]ok[/green]" if result.passed else f"[red]FAIL[/red] {result.failure}"
        table.add_row(result.name, str(result.cases), str(result.duration_ms), verdict)
    console.print(table)
