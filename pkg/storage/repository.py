import datetime as dt
import sqlite3
from typing import Iterable, Optional

from core import PairOutcome, SweepRun

# Findings are stored one per line.
_FINDING_SEP = "\n"


def _outcome_from_row(row: sqlite3.Row) -> PairOutcome:
    findings = row["findings"]
    return PairOutcome(
        n=row["n"],
        t=row["t"],
        ok=bool(row["ok"]),
        construction=row["construction"],
        findings=findings.split(_FINDING_SEP) if findings else [],
        oracle=row["oracle"],
        oracle_steps=row["oracle_steps"],
    )


class SweepRepository:
    """Repository for recorded sweeps and their per-pair outcomes."""

    def __init__(self, conn: sqlite3.Connection):
        self.conn = conn

    def add_run(self, run: SweepRun) -> int:
        """Insert a run header and return its id."""
        now = run.created_at or dt.datetime.now().isoformat(timespec="seconds")
        cursor = self.conn.execute(
            """
            INSERT INTO sweep_runs (created_at, n_min, n_max, t_policy, workers, oracle, total, passed, failed)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)
            """,
            (now, run.n_min, run.n_max, run.t_policy, run.workers, int(run.oracle),
             run.total, run.passed, run.failed),
        )
        self.conn.commit()
        return cursor.lastrowid

    def add_results(self, run_id: int, outcomes: Iterable[PairOutcome]) -> int:
        """Batch insert pair outcomes for a run."""
        values = [
            (run_id, o.n, o.t, int(o.ok), o.construction, o.oracle, o.oracle_steps,
             _FINDING_SEP.join(o.findings))
            for o in outcomes
        ]
        if not values:
            return 0
        self.conn.executemany(
            """
            INSERT INTO sweep_results (run_id, n, t, ok, construction, oracle, oracle_steps, findings)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?)
            """,
            values,
        )
        self.conn.commit()
        return len(values)

    def get_run(self, run_id: int) -> Optional[SweepRun]:
        row = self.conn.execute("SELECT * FROM sweep_runs WHERE id = ?", (run_id,)).fetchone()
        if row:
            return SweepRun(**dict(row))
        return None

    def list_runs(self, limit: int = 20) -> list[SweepRun]:
        """Most recent runs first."""
        rows = self.conn.execute(
            "SELECT * FROM sweep_runs ORDER BY id DESC LIMIT ?", (limit,)
        ).fetchall()
        return [SweepRun(**dict(row)) for row in rows]

    def get_results(self, run_id: int, failed_only: bool = False) -> list[PairOutcome]:
        query = "SELECT * FROM sweep_results WHERE run_id = ?"
        if failed_only:
            query += " AND ok = 0"
        query += " ORDER BY n, t"
        rows = self.conn.execute(query, (run_id,)).fetchall()
        return [_outcome_from_row(row) for row in rows]

    def delete_run(self, run_id: int) -> None:
        """Delete a run (results are cascade deleted)."""
        self.conn.execute("DELETE FROM sweep_runs WHERE id = ?", (run_id,))
        self.conn.commit()
