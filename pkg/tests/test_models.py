from __future__ import annotations

import json

import pytest
from pydantic import ValidationError

from skewchar.diagrams import Partition, SkewDiagram
from skewchar.exceptions import IdentityMismatch
from skewchar.models import BetheInput, CheckResult, DiagramEcho, VerificationReport, ZetaInput
from skewchar.output import canonical_json


def test_report_verdict_is_serialized():
    report = VerificationReport(name="demo", stats={"m": 1})
    report.add(CheckResult.ok("first"))
    assert report.model_dump()["passed"] is True
    report.add(CheckResult.failed("second", "lhs != rhs", order=2, counterexample="+1 * d[1;0]"))
    dumped = report.model_dump(mode="json")
    assert dumped["passed"] is False
    assert dumped["checks"][1]["order"] == 2
    assert report.first_failure().name == "second"


def test_raise_for_status_carries_the_report():
    report = VerificationReport.single("demo", CheckResult.failed("only", "broken"))
    with pytest.raises(IdentityMismatch) as info:
        report.raise_for_status()
    assert info.value.report is report
    ok = VerificationReport.single("demo", CheckResult.ok("only"))
    assert ok.raise_for_status() is ok


def test_diagram_echo():
    echo = DiagramEcho.from_diagram(SkewDiagram(Partition((2, 1)), Partition((1,))))
    assert echo.lam == [2, 1] and echo.mu == [1]
    assert echo.anchor == "0/1"
    assert {(b.row, b.col, b.content) for b in echo.boxes} == {(1, 2, "1/1"), (2, 1, "-1/1")}


def test_canonical_json_sorts_keys():
    report = VerificationReport(name="demo", stats={"n": 2, "m": 1})
    text = canonical_json(report)
    assert text == canonical_json(json.loads(text))
    assert text.index('"m"') < text.index('"n"')


def test_bethe_input_validation():
    data = BetheInput.model_validate_json('{"m": 1, "n": 1, "zeta": [{"num": [1]}, {"num": ["1/2"]}]}')
    assert data.order == 4
    assert data.zeta[0].den == [1]
    assert data.roots == []
    with pytest.raises(ValidationError):
        ZetaInput(num=[1], den=[])
    with pytest.raises(ValidationError):
        BetheInput(m=-1, n=1, zeta=[])
    with pytest.raises(ValidationError):
        BetheInput(m=1, n=1, zeta=[], order=0)


def test_field_descriptions_are_english():
    import inspect

    from pydantic import BaseModel

    import skewchar.models as models

    described = [
        (cls.__name__, name, info.description)
        for cls in vars(models).values()
        if inspect.isclass(cls) and issubclass(cls, BaseModel) and cls.__module__ == models.__name__
        for name, info in cls.model_fields.items()
        if info.description
    ]
    assert described
    assert [entry for entry in described if not entry[2].isascii()] == []
