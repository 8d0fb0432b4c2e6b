from __future__ import annotations

import logging

import pytest

from skewchar.config import Settings, load_settings
from skewchar.exceptions import ConfigError, SizeCapExceeded, UsageError


def test_defaults(monkeypatch):
    for name in ("SKEWCHAR_JOBS", "SKEWCHAR_MAX_BOXES", "SKEWCHAR_MAX_RANK"):
        monkeypatch.delenv(name, raising=False)
    settings = load_settings()
    assert settings.jobs == 1
    assert settings.max_boxes == 40
    assert settings.max_rank == 6


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SKEWCHAR_JOBS", "3")
    monkeypatch.setenv("SKEWCHAR_MAX_ORDER", " 20 ")
    monkeypatch.setenv("SKEWCHAR_MAX_BOXES", "")
    settings = load_settings()
    assert settings.jobs == 3
    assert settings.max_order == 20
    assert settings.max_boxes == 40


@pytest.mark.parametrize("value", ["many", "0", "-2"])
def test_malformed_jobs(monkeypatch, value):
    monkeypatch.setenv("SKEWCHAR_JOBS", value)
    with pytest.raises(ConfigError):
        load_settings()


def test_with_jobs():
    settings = Settings()
    assert settings.with_jobs(None) is settings
    assert settings.with_jobs(4).jobs == 4
    with pytest.raises(ConfigError):
        settings.with_jobs(0)


def test_caps():
    settings = Settings(max_boxes=5, max_rank=2)
    settings.check_caps(boxes=5, rank=2)
    with pytest.raises(SizeCapExceeded, match="--force") as info:
        settings.check_caps(boxes=6, rank=3)
    assert isinstance(info.value, UsageError)
    assert "6 boxes" in str(info.value) and "m+n=3" in str(info.value)


def test_forced_caps_only_warn(caplog):
    settings = Settings(max_order=2)
    with caplog.at_level(logging.WARNING, logger="skewchar.config"):
        settings.check_caps(order=3, force=True)
    assert "overridden" in caplog.text
