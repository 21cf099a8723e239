# Sweep Service
"""
Construct, verify and optionally brute-force check every DP(n, t) in a range.
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from core import (
    ConstructionIntegrityError,
    ParameterError,
    PairOutcome,
    SearchBudgetExceeded,
    SweepRun,
    make_graph,
    valid_pairs,
)

from construct import construction_name, cycle_ids, even_hamilton, odd_hamilton
from oracle import SearchBudget, search_hamilton
from storage import SweepRepository, connect
from verify import check_proof_partitions, verify_hamilton, verify_serial

logger = logging.getLogger(__name__)

ORACLE_AGREE = "agree"
ORACLE_NO_CYCLE = "no-cycle"
ORACLE_BUDGET = "budget"
ORACLE_SKIPPED = "skipped"
ORACLE_INVALID = "invalid"
ORACLE_STATUSES = (ORACLE_AGREE, ORACLE_NO_CYCLE, ORACLE_INVALID, ORACLE_BUDGET, ORACLE_SKIPPED)


@dataclass(frozen=True)
class SweepSpec:
    n_min: int = 3
    n_max: int = 31
    t_values: Optional[tuple[int, ...]] = None
    workers: int = 1
    oracle: bool = False
    budget: SearchBudget = field(default_factory=SearchBudget)
    partitions: bool = False

    @property
    def t_policy(self) -> str:
        if self.t_values is None:
            return "all"
        return ",".join(str(t) for t in self.t_values)


def validate_spec(spec: SweepSpec) -> SweepSpec:
    if spec.n_min < 3:
        raise ParameterError(f"sweep lower bound n={spec.n_min} violates n >= 3")
    if spec.n_max < spec.n_min:
        raise ParameterError(f"sweep range [{spec.n_min}, {spec.n_max}] is empty")
    if spec.workers < 1:
        raise ParameterError(f"workers={spec.workers} must be at least 1")
    if spec.t_values is not None:
        if not spec.t_values:
            raise ParameterError("explicit t list is empty")
        bad = [t for t in spec.t_values if t < 1]
        if bad:
            raise ParameterError(f"t values {bad} violate t >= 1")
    return spec


def sweep_pairs(spec: SweepSpec) -> list[tuple[int, int]]:
    """(n, t) pairs in scope; explicit t values are kept only where 2t < n."""
    if spec.t_values is None:
        return valid_pairs(spec.n_min, spec.n_max)
    ts = sorted(set(spec.t_values))
    return [(n, t) for n in range(spec.n_min, spec.n_max + 1) for t in ts if 2 * t < n]


def _path_findings(g, ids, a) -> list[str]:
    """Rebuild the cycle path by path and compare it with the serial-id construction."""
    try:
        reference = odd_hamilton(g, a) if a is not None else even_hamilton(g)
    except ConstructionIntegrityError as exc:
        return [f"paths: {exc}"]
    if reference.serial_ids() != ids.tolist():
        return ["paths: path-level construction differs from the serial-id cycle"]
    return []


def _run_oracle(g, budget: SearchBudget, outcome: PairOutcome) -> None:
    if g.order > budget.max_vertices:
        outcome.oracle = ORACLE_SKIPPED
        return
    try:
        result = search_hamilton(g, budget)
    except SearchBudgetExceeded as exc:
        logger.warning("%s: oracle gave up after %d steps", g, exc.steps)
        outcome.oracle = ORACLE_BUDGET
        outcome.oracle_steps = exc.steps
        return
    outcome.oracle_steps = result.steps
    if result.cycle is None:
        outcome.oracle = ORACLE_NO_CYCLE
        outcome.findings.append("oracle: exhaustive search found no Hamilton cycle")
        return
    report = verify_hamilton(g, result.cycle.vertices)
    if not report.ok:
        outcome.oracle = ORACLE_INVALID
        outcome.findings.extend(f"oracle: {f}" for f in report.failures)
        return
    outcome.oracle = ORACLE_AGREE


def check_pair(n: int, t: int, budget: Optional[SearchBudget] = None, partitions: bool = False) -> PairOutcome:
    """Construct and verify one DP(n, t).

    With partitions, the odd-n coverage checks run and the path-level
    construction is compared with the serial-id one. With a budget, the
    brute-force oracle runs too and its cycle is verified independently.
    """
    g = make_graph(n, t)
    outcome = PairOutcome(n=n, t=t, construction=construction_name(g))
    try:
        ids, a = cycle_ids(g)
    except ConstructionIntegrityError as exc:
        outcome.findings.append(f"construction: {exc}")
        return outcome

    outcome.findings.extend(str(f) for f in verify_serial(g, ids).failures)
    if partitions:
        if a is not None:
            outcome.findings.extend(str(f) for f in check_proof_partitions(g, a).failures)
        outcome.findings.extend(_path_findings(g, ids, a))
    if budget is not None:
        _run_oracle(g, budget, outcome)
    outcome.ok = not outcome.findings
    return outcome


def _check_args(args: tuple[int, int, Optional[SearchBudget], bool]) -> PairOutcome:
    return check_pair(*args)


@dataclass
class SweepSummary:
    spec: SweepSpec
    outcomes: list[PairOutcome]

    @property
    def total(self) -> int:
        return len(self.outcomes)

    @property
    def passed(self) -> int:
        return sum(1 for o in self.outcomes if o.ok)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[PairOutcome]:
        return [o for o in self.outcomes if not o.ok]

    def oracle_counts(self) -> Counter:
        return Counter(o.oracle for o in self.outcomes if o.oracle is not None)

    def to_run(self) -> SweepRun:
        return SweepRun(
            n_min=self.spec.n_min,
            n_max=self.spec.n_max,
            t_policy=self.spec.t_policy,
            workers=self.spec.workers,
            oracle=int(self.spec.oracle),
            total=self.total,
            passed=self.passed,
            failed=self.failed,
        )


def run_sweep(spec: SweepSpec) -> SweepSummary:
    """Check every pair in scope; outcomes come back sorted by (n, t)."""
    validate_spec(spec)
    pairs = sweep_pairs(spec)
    if not pairs:
        raise ParameterError(f"no valid (n, t) pairs for n in [{spec.n_min}, {spec.n_max}], t {spec.t_policy}")
    budget = spec.budget if spec.oracle else None
    jobs = [(n, t, budget, spec.partitions) for n, t in pairs]

    if spec.workers == 1 or len(jobs) == 1:
        outcomes = [_check_args(job) for job in jobs]
    else:
        chunksize = max(1, len(jobs) // (spec.workers * 8))
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            outcomes = list(pool.map(_check_args, jobs, chunksize=chunksize))
    outcomes.sort(key=lambda o: (o.n, o.t))

    summary = SweepSummary(spec=spec, outcomes=outcomes)
    logger.info(
        "sweep n in [%d, %d]: %d pairs, %d passed, %d failed",
        spec.n_min, spec.n_max, summary.total, summary.passed, summary.failed,
    )
    return summary


def format_failures(outcomes: list[PairOutcome]) -> list[str]:
    lines = []
    for o in outcomes:
        if o.ok:
            continue
        for finding in o.findings or ["unknown failure"]:
            lines.append(f"FAIL DP({o.n},{o.t}): {finding}")
    return lines


def format_summary(summary: SweepSummary) -> str:
    spec = summary.spec
    lines = [
        f"# DP(n,t) sweep: n in [{spec.n_min}, {spec.n_max}], t {spec.t_policy}",
        f"pairs: {summary.total}  passed: {summary.passed}  failed: {summary.failed}",
    ]
    if spec.oracle:
        counts = summary.oracle_counts()
        lines.append("oracle: " + "  ".join(f"{key} {counts.get(key, 0)}" for key in ORACLE_STATUSES))
        for o in summary.outcomes:
            if o.oracle == ORACLE_BUDGET:
                lines.append(f"BUDGET DP({o.n},{o.t}): oracle stopped after {o.oracle_steps} steps")
    lines.extend(format_failures(summary.outcomes))
    return "\n".join(lines) + "\n"


class SweepService:
    """Runs sweeps and optionally records them in the sqlite ledger."""

    def __init__(self, db_path: Optional[Path] = None):
        self.db_path = db_path

    def run(self, spec: SweepSpec) -> tuple[SweepSummary, Optional[int]]:
        summary = run_sweep(spec)
        if self.db_path is None:
            return summary, None
        conn = connect(Path(self.db_path))
        try:
            repo = SweepRepository(conn)
            run_id = repo.add_run(summary.to_run())
            repo.add_results(run_id, summary.outcomes)
        finally:
            conn.close()
        logger.info("sweep recorded as run %d in %s", run_id, self.db_path)
        return summary, run_id

    def _ledger_exists(self) -> bool:
        # Reading must not create the ledger.
        return self.db_path is not None and Path(self.db_path).is_file()

    def history(self, limit: int = 20) -> list[SweepRun]:
        if not self._ledger_exists():
            return []
        conn = connect(Path(self.db_path))
        try:
            return SweepRepository(conn).list_runs(limit=limit)
        finally:
            conn.close()

    def run_details(self, run_id: int) -> tuple[Optional[SweepRun], list[PairOutcome]]:
        """A recorded run and its failed pairs."""
        if not self._ledger_exists():
            return None, []
        conn = connect(Path(self.db_path))
        try:
            repo = SweepRepository(conn)
            run = repo.get_run(run_id)
            if run is None:
                return None, []
            return run, repo.get_results(run_id, failed_only=True)
        finally:
            conn.close()
