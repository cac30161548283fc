# census/run.py
"""Compute census rows and upsert them into ``census_rows``."""
from __future__ import annotations

import argparse
import datetime as dt
import logging

from census.db import session_factory
from census.store import upsert_rows
from yclaw.config import settings
from yclaw.enumerator import census_rows

logger = logging.getLogger("census")


def run(
    max_n: int,
    oracle: bool = False,
    jobs: int | None = None,
    database_url: str | None = None,
) -> int:
    start = dt.datetime.now(dt.timezone.utc)
    rows = census_rows(max_n, oracle=oracle, jobs=jobs)
    logger.info("fetched=%d source=%s", len(rows), "oracle" if oracle else "certificates")

    with session_factory(database_url)() as db:
        loaded = upsert_rows(db, rows)

    dur = (dt.datetime.now(dt.timezone.utc) - start).total_seconds()
    logger.info("loaded=%d table=census_rows in %.2fs", loaded, dur)
    return loaded


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--oracle", action="store_true")
    ap.add_argument("--jobs", type=int, default=settings.jobs)
    ap.add_argument("--database-url", help="defaults to DATABASE_URL")
    args = ap.parse_args()
    logging.basicConfig(level=settings.log_level, format="[%(name)s] %(message)s")
    run(args.max_n, oracle=args.oracle, jobs=args.jobs, database_url=args.database_url)


if __name__ == "__main__":
    main()
