"""
junta_bounds/config.py
───────
Runtime settings. Values come from the environment (a local `.env` file is
loaded first) and are validated by a pydantic model.
"""

import os
from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

load_dotenv()

# ---------- Defaults ------------------------------------------
_NMAX_DEFAULT = 24  # 2^24-bit tables (16 MiB as bits)
_BS_NMAX_DEFAULT = 12
_SEARCH_NMAX_CEILING = 5  # 2^32 tables; nothing larger is enumerable
_CACHE_DIR_DEFAULT = ".bf-cache"
_DECIMAL_DIGITS_DEFAULT = 4


class Settings(BaseModel):
    n_max: int = Field(default=_NMAX_DEFAULT, ge=1)
    bs_max_arity: int = Field(default=_BS_NMAX_DEFAULT, ge=0)
    search_max_arity: int = Field(default=_SEARCH_NMAX_CEILING, ge=0, le=_SEARCH_NMAX_CEILING)
    cache_dir: Path = Path(_CACHE_DIR_DEFAULT)
    decimal_digits: int = Field(default=_DECIMAL_DIGITS_DEFAULT, ge=1)
    log_level: str = "INFO"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return value


# env var -> settings field
_ENV_FIELDS = {
    "BF_NMAX": "n_max",
    "BF_BS_NMAX": "bs_max_arity",
    "BF_SEARCH_NMAX": "search_max_arity",
    "BF_CACHE_DIR": "cache_dir",
    "BF_DECIMAL_DIGITS": "decimal_digits",
    "BF_LOG_LEVEL": "log_level",
}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Build the settings once per process; call get_settings.cache_clear() after changing the environment."""
    values = {field: os.getenv(var) for var, field in _ENV_FIELDS.items() if os.getenv(var)}
    return Settings(**values)
