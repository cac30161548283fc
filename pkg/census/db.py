# census/db.py
"""Engines and sessions for the census store.

An in-memory SQLite URL is pinned to one connection so the table outlives
the session that created it.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Any

from sqlalchemy import Engine, create_engine
from sqlalchemy.orm import Session, sessionmaker
from sqlalchemy.pool import StaticPool

from yclaw.config import settings

MEMORY_URLS = ("sqlite://", "sqlite:///:memory:")


def make_engine(url: str) -> Engine:
    kwargs: dict[str, Any] = {"future": True}
    if url.startswith("sqlite"):
        kwargs["connect_args"] = {"check_same_thread": False}
        if url in MEMORY_URLS:
            kwargs["poolclass"] = StaticPool
    else:
        kwargs["pool_pre_ping"] = True
    return create_engine(url, **kwargs)


@lru_cache(maxsize=None)
def session_factory(url: str | None = None) -> sessionmaker[Session]:
    """One sessionmaker per database URL; ``None`` means ``settings.database_url``."""
    engine = make_engine(url or settings.database_url)
    return sessionmaker(bind=engine, autoflush=False, autocommit=False, future=True)
