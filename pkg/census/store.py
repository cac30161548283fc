# census/store.py
from __future__ import annotations

import datetime as dt
from typing import Any

from sqlalchemy import bindparam, text
from sqlalchemy.engine import Connection, Engine
from sqlalchemy.orm import Session
from sqlalchemy.sql.elements import TextClause
from sqlalchemy.types import DateTime

from yclaw.enumerator import CensusRow

# g_n overflows 64 bits from n = 10 on, so it is stored as decimal text
DDL = """
CREATE TABLE IF NOT EXISTS census_rows (
    n                   INTEGER PRIMARY KEY,
    connected           INTEGER,
    yfree_unlabeled     INTEGER NOT NULL,
    g_n                 TEXT NOT NULL,
    growth_point        DOUBLE PRECISION NOT NULL,
    source              TEXT NOT NULL,
    computed_at         TIMESTAMPTZ
)
"""

COLUMNS = ("n", "connected", "yfree_unlabeled", "g_n", "growth_point", "source", "computed_at")


def _row(r: CensusRow) -> dict[str, Any]:
    """Transform a census row into DB-ready values."""
    return {
        "n": r.n,
        "connected": r.unlabeled_connected,
        "yfree_unlabeled": r.unlabeled_yfree,
        "g_n": str(r.labeled_yfree),
        "growth_point": r.growth_point,
        "source": r.source,
        "computed_at": dt.datetime.now(dt.timezone.utc),
    }


def build_upsert_sql(dialect_name: str) -> str:
    """INSERT .. ON CONFLICT (n) DO UPDATE for Postgres (with a timestamptz cast) or SQLite."""
    cols = ", ".join(COLUMNS)
    updates = ",\n      ".join(f"{c}=EXCLUDED.{c}" for c in COLUMNS if c != "n")
    if dialect_name == "postgresql":
        values = ", ".join(f":{c}" for c in COLUMNS[:-1]) + ", (:computed_at)::timestamptz"
    else:
        values = ", ".join(f":{c}" for c in COLUMNS)
        updates = updates.replace("EXCLUDED.", "excluded.")
    return f"""
    INSERT INTO census_rows ({cols})
    VALUES ({values})
    ON CONFLICT (n) DO UPDATE SET
      {updates}
    """


def upsert_stmt_for(db: Session) -> TextClause:
    bind: Engine | Connection = db.get_bind()
    sql = build_upsert_sql(bind.dialect.name)
    return text(sql).bindparams(bindparam("computed_at", type_=DateTime(timezone=True)))


def upsert_rows(db: Session, rows: list[CensusRow]) -> int:
    """Create the table if needed and upsert every row; returns the row count."""
    db.execute(text(DDL))
    if rows:
        db.execute(upsert_stmt_for(db), [_row(r) for r in rows])
    db.commit()
    return len(rows)


def load_rows(db: Session) -> list[CensusRow]:
    result = db.execute(
        text(
            "SELECT n, connected, yfree_unlabeled, g_n, growth_point, source "
            "FROM census_rows ORDER BY n"
        )
    )
    return [
        CensusRow(
            n=r.n,
            unlabeled_connected=r.connected,
            unlabeled_yfree=r.yfree_unlabeled,
            labeled_yfree=int(r.g_n),
            growth_point=r.growth_point,
            source=r.source,
        )
        for r in result
    ]
