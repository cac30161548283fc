# yclaw/config.py
from __future__ import annotations
from pydantic import BaseModel

import os
from typing import Final
from dotenv import load_dotenv

# Load .env for local dev (no-op if not present)
load_dotenv()


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise RuntimeError(
            f"Environment variable {name} must be an integer, got {value!r}. "
            "Fix it in your environment or .env file."
        ) from None


class Settings(BaseModel):
    # Census store defaults to SQLite if not set
    database_url: Final[str] = os.getenv("DATABASE_URL", "sqlite:///./census.db")

    # Desk-scale bounds for the exponential searches
    canon_max_n: Final[int] = _env_int("YCLAW_CANON_MAX_N", 16)
    minor_max_n: Final[int] = _env_int("YCLAW_MINOR_MAX_N", 9)
    census_max_n: Final[int] = _env_int("YCLAW_CENSUS_MAX_N", 8)
    enum_max_n: Final[int] = _env_int("YCLAW_ENUM_MAX_N", 10)
    prooflab_max_n: Final[int] = _env_int("YCLAW_PROOFLAB_MAX_N", 12)
    necklace_search_cap: Final[int] = _env_int("YCLAW_NECKLACE_SEARCH_CAP", 4096)

    jobs: Final[int] = _env_int("YCLAW_JOBS", 1)
    log_level: Final[str] = os.getenv("YCLAW_LOG_LEVEL", "WARNING")


settings = Settings()
