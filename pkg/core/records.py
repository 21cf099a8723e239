"""Sweep bookkeeping models shared by the sweep service and the sqlite ledger."""
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class PairOutcome:
    """Result of constructing and checking one DP(n, t)."""
    n: int = 0
    t: int = 0
    ok: bool = False
    construction: str = ""
    findings: list[str] = field(default_factory=list)
    oracle: Optional[str] = None
    oracle_steps: int = 0


@dataclass
class SweepRun:
    """One recorded sweep."""
    id: Optional[int] = None
    created_at: str = ""
    n_min: int = 3
    n_max: int = 31
    t_policy: str = "all"
    workers: int = 1
    oracle: int = 0
    total: int = 0
    passed: int = 0
    failed: int = 0
