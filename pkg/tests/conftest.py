import pytest

from junta_bounds.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch, tmp_path):
    """Each test sees default settings and a private cache directory."""
    for var in ("BF_NMAX", "BF_BS_NMAX", "BF_SEARCH_NMAX", "BF_DECIMAL_DIGITS", "BF_LOG_LEVEL"):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv("BF_CACHE_DIR", str(tmp_path / "cache"))
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
