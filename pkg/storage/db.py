import sqlite3
from pathlib import Path


SCHEMA_SQL = """
CREATE TABLE IF NOT EXISTS sweep_runs (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    created_at TEXT NOT NULL,
    n_min INTEGER NOT NULL,
    n_max INTEGER NOT NULL,
    t_policy TEXT NOT NULL DEFAULT 'all',
    workers INTEGER NOT NULL DEFAULT 1,
    oracle INTEGER NOT NULL DEFAULT 0,
    total INTEGER NOT NULL DEFAULT 0,
    passed INTEGER NOT NULL DEFAULT 0,
    failed INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE IF NOT EXISTS sweep_results (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    run_id INTEGER NOT NULL,
    n INTEGER NOT NULL,
    t INTEGER NOT NULL,
    ok INTEGER NOT NULL,
    construction TEXT NOT NULL DEFAULT '',
    oracle TEXT,
    oracle_steps INTEGER NOT NULL DEFAULT 0,
    findings TEXT NOT NULL DEFAULT '',
    FOREIGN KEY(run_id) REFERENCES sweep_runs(id) ON DELETE CASCADE
);
CREATE INDEX IF NOT EXISTS idx_sweep_results_run_id ON sweep_results(run_id);
"""


def connect(db_path: Path) -> sqlite3.Connection:
    """Connect to the sweep ledger and make sure the schema exists."""
    db_path.parent.mkdir(parents=True, exist_ok=True)
    conn = sqlite3.connect(str(db_path))
    conn.row_factory = sqlite3.Row
    conn.execute("PRAGMA foreign_keys = ON")
    conn.executescript(SCHEMA_SQL)
    conn.commit()
    return conn
