from pathlib import Path

import pytest
from pydantic import ValidationError

from junta_bounds.config import Settings, get_settings


def test_defaults():
    settings = Settings()
    assert settings.n_max == 24
    assert settings.bs_max_arity == 12
    assert settings.search_max_arity == 5
    assert settings.cache_dir == Path(".bf-cache")
    assert settings.decimal_digits == 4
    assert settings.log_level == "INFO"


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("BF_NMAX", "10")
    monkeypatch.setenv("BF_LOG_LEVEL", "debug")
    monkeypatch.setenv("BF_CACHE_DIR", str(tmp_path))
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.n_max == 10
    assert settings.log_level == "DEBUG"
    assert settings.cache_dir == tmp_path


def test_settings_are_built_once():
    assert get_settings() is get_settings()


@pytest.mark.parametrize(
    "var, value",
    [("BF_SEARCH_NMAX", "6"), ("BF_NMAX", "0"), ("BF_LOG_LEVEL", "chatty"), ("BF_DECIMAL_DIGITS", "x")],
)
def test_invalid_values_are_rejected(monkeypatch, var, value):
    monkeypatch.setenv(var, value)
    get_settings.cache_clear()
    with pytest.raises(ValidationError):
        get_settings()
