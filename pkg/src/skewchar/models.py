"""Pydantic models for reports and file inputs."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Optional, Union

from pydantic import BaseModel, Field, computed_field, field_validator

from skewchar.core_ring import format_rat

if TYPE_CHECKING:
    from skewchar.diagrams import SkewDiagram


class CheckResult(BaseModel):
    name: str = Field(description="Identity or sub-check name")
    passed: bool
    detail: str = ""
    order: Optional[int] = Field(default=None, description="q-tau order of the failing coefficient, if any")
    counterexample: Optional[str] = Field(default=None, description="First mismatching monomial, in text form")

    @classmethod
    def ok(cls, name: str, detail: str = "") -> "CheckResult":
        return cls(name=name, passed=True, detail=detail)

    @classmethod
    def failed(
        cls, name: str, detail: str, *, order: Optional[int] = None, counterexample: Optional[str] = None
    ) -> "CheckResult":
        return cls(name=name, passed=False, detail=detail, order=order, counterexample=counterexample)


class VerificationReport(BaseModel):
    """Outcome of one verification run; failing checks keep their first counterexample."""

    name: str
    checks: list[CheckResult] = Field(default_factory=list)
    stats: dict[str, Union[int, str]] = Field(default_factory=dict)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @classmethod
    def single(cls, name: str, check: CheckResult) -> "VerificationReport":
        return cls(name=name, checks=[check])

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.passed), None)

    def raise_for_status(self) -> "VerificationReport":
        from skewchar.exceptions import IdentityMismatch

        if not self.passed:
            raise IdentityMismatch(self)
        return self


class BoxEcho(BaseModel):
    row: int
    col: int
    content: str = Field(description="Exact content of the box as p/q")


class DiagramEcho(BaseModel):
    lam: list[int]
    mu: list[int]
    anchor: str
    boxes: list[BoxEcho]

    @classmethod
    def from_diagram(cls, d: SkewDiagram) -> "DiagramEcho":
        return cls(
            lam=list(d.lam.parts),
            mu=list(d.mu.parts),
            anchor=format_rat(d.anchor),
            boxes=[BoxEcho(row=i, col=j, content=format_rat(c)) for (i, j), c in d.content_map().items()],
        )


class CharacterSummary(BaseModel):
    diagram: DiagramEcho
    m: int
    n: int
    monomials: int
    leading_weight: Optional[list[str]] = None
    parity_histogram: dict[str, int]
    character: dict[str, Any]


class WeightDim(BaseModel):
    weight: list[str]
    dim: int


class FusionRankReport(BaseModel):
    diagram: DiagramEcho
    m: int
    n: int
    tableau: list[list[int]]
    rank: int
    ssyt_count: int
    match: bool
    weight_dims: list[WeightDim]
    weights_match: bool


class ZetaInput(BaseModel):
    num: list[Union[int, str]] = Field(description="Numerator coefficients, highest degree first")
    den: list[Union[int, str]] = Field(default_factory=lambda: [1], description="Denominator coefficients, highest degree first")

    @field_validator("den")
    @classmethod
    def _den_nonempty(cls, v: list[Union[int, str]]) -> list[Union[int, str]]:
        if not v:
            raise ValueError("denominator needs at least one coefficient")
        return v


class BetheInput(BaseModel):
    """Input file of the ``bethe`` command."""

    m: int = Field(ge=0)
    n: int = Field(ge=0)
    zeta: list[ZetaInput]
    roots: list[list[Union[int, str]]] = Field(default_factory=list)
    order: int = Field(default=4, ge=1)


class ResidualRow(BaseModel):
    i: int
    j: int
    root: str
    residual: Optional[str] = None
    error: Optional[str] = None


class BetheReport(BaseModel):
    m: int
    n: int
    order: int
    residuals: list[ResidualRow]
    factorization: VerificationReport


class SuiteCaseResult(BaseModel):
    name: str
    passed: bool
    cases: int = Field(description="Number of instances checked")
    duration_ms: int
    failure: Optional[str] = None


class SuiteSummary(BaseModel):
    passed: bool
    results: list[SuiteCaseResult]
