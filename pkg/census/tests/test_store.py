# census/tests/test_store.py
import datetime as dt
from collections.abc import Iterator
from pathlib import Path
from typing import Any

import pytest
from sqlalchemy import text
from sqlalchemy.orm import Session, sessionmaker
from sqlalchemy.pool import StaticPool

import census.run as census_run
from census.db import make_engine, session_factory
from census.store import DDL, build_upsert_sql, load_rows, upsert_rows
from yclaw.enumerator import CensusRow, growth_point


def as_utc_dt(value: Any) -> dt.datetime:
    """SQLite hands timestamps back as text; Postgres as aware datetimes."""
    if isinstance(value, dt.datetime):
        return value if value.tzinfo else value.replace(tzinfo=dt.timezone.utc)
    if isinstance(value, str):
        s = value.strip()
        if "T" not in s and " " in s:
            s = s.replace(" ", "T", 1)
        if s[-6] not in "+-" and not s.endswith("Z"):
            s = s + "+00:00"
        return dt.datetime.fromisoformat(s).astimezone(dt.timezone.utc)
    raise TypeError(f"Unexpected timestamp type: {type(value)}")


def row(n: int, g_n: int, source: str = "certificates") -> CensusRow:
    return CensusRow(
        n=n,
        unlabeled_yfree=n,
        labeled_yfree=g_n,
        growth_point=growth_point(n, g_n),
        source=source,  # type: ignore[arg-type]
    )


# ---------- fixtures ----------


@pytest.fixture
def in_memory_db() -> Iterator[Session]:
    with sessionmaker(bind=make_engine("sqlite://"), future=True)() as session:
        session.execute(text(DDL))
        yield session


# ---------- tests ----------


def test_upsert_and_load(in_memory_db: Session) -> None:
    rows = [row(1, 1), row(2, 1), row(3, 4)]
    assert upsert_rows(in_memory_db, rows) == 3
    assert load_rows(in_memory_db) == rows

    stamps = in_memory_db.execute(text("SELECT computed_at FROM census_rows")).scalars().all()
    for s in stamps:
        assert as_utc_dt(s).tzinfo is not None


def test_upsert_replaces_existing_rows(in_memory_db: Session) -> None:
    upsert_rows(in_memory_db, [row(3, 4)])
    upsert_rows(in_memory_db, [row(3, 4, source="oracle"), row(4, 38)])
    loaded = load_rows(in_memory_db)
    assert [r.n for r in loaded] == [3, 4]
    assert loaded[0].source == "oracle"


def test_big_counts_survive(in_memory_db: Session) -> None:
    big = 10**30 + 7
    upsert_rows(in_memory_db, [row(20, big)])
    [loaded] = load_rows(in_memory_db)
    assert loaded.labeled_yfree == big


def test_empty_upsert_creates_table(in_memory_db: Session) -> None:
    assert upsert_rows(in_memory_db, []) == 0
    assert load_rows(in_memory_db) == []


def test_upsert_sql_per_dialect() -> None:
    pg = build_upsert_sql("postgresql")
    assert "(:computed_at)::timestamptz" in pg
    assert "g_n=EXCLUDED.g_n" in pg
    lite = build_upsert_sql("sqlite")
    assert "::timestamptz" not in lite
    assert "source=excluded.source" in lite
    assert "n=excluded.n" not in lite


def test_run_loads_the_census(tmp_path: Path) -> None:
    url = f"sqlite:///{tmp_path / 'census.db'}"
    assert census_run.run(4, database_url=url) == 4
    with session_factory(url)() as db:
        loaded = load_rows(db)
    assert [r.labeled_yfree for r in loaded] == [1, 1, 4, 38]
    assert {r.source for r in loaded} == {"certificates"}


def test_engines_per_url(tmp_path: Path) -> None:
    assert isinstance(make_engine("sqlite://").pool, StaticPool)
    file_engine = make_engine(f"sqlite:///{tmp_path / 'c.db'}")
    assert not isinstance(file_engine.pool, StaticPool)
    assert file_engine.dialect.name == "sqlite"


def test_session_factory_is_shared_per_url(tmp_path: Path) -> None:
    url = f"sqlite:///{tmp_path / 'c.db'}"
    assert session_factory(url) is session_factory(url)
    with session_factory(url)() as db:
        upsert_rows(db, [row(2, 1)])
    with session_factory(url)() as db:
        assert [r.n for r in load_rows(db)] == [2]
