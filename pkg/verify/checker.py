"""Certificate checking for claimed Hamilton cycles.

The checker rebuilds adjacency itself from the edge formulas instead of
asking core or construct, so a construction bug cannot certify itself.
"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import networkx as nx
import numpy as np

from core import DpGraph, Layer, in_universe, label


@dataclass(frozen=True)
class Finding:
    """One failed check; position is an index into the candidate sequence."""
    check: str
    position: Optional[int] = None
    vertex: Optional[str] = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" at {self.position}" if self.position is not None else ""
        what = f" ({self.vertex})" if self.vertex else ""
        return f"{self.check}{where}{what}: {self.detail}"


@dataclass
class VerificationReport:
    failures: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, check: str, position: Optional[int] = None, vertex: Any = None, detail: str = "") -> None:
        self.failures.append(Finding(check, position, _describe(vertex), detail))

    def record(self, check: str, position: Optional[int] = None, vertex: Optional[str] = None, detail: str = "") -> None:
        self.failures.append(Finding(check, position, vertex, detail))

    def extend(self, other: "VerificationReport") -> None:
        self.failures.extend(other.failures)

    def checks_failed(self) -> set[str]:
        return {f.check for f in self.failures}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(f) for f in self.failures)


def _describe(v: Any) -> Optional[str]:
    if v is None:
        return None
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], Layer):
        return label(v)
    return repr(v)


_BLOCK = {Layer.X: 0, Layer.U: 1, Layer.V: 2, Layer.Y: 3}
_TAGS = "xuvy"


def _linked(n: int, t: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise adjacency of serial ids a[k], b[k], from the edge formulas."""
    la, lb = a // n, b // n
    d = (b % n - a % n) % n
    low, high = np.minimum(la, lb), np.maximum(la, lb)
    rim = (la == lb) & ((la == 0) | (la == 3)) & ((d == 1) | (d == n - 1))
    spoke = (((low == 0) & (high == 1)) | ((low == 2) & (high == 3))) & (d == 0)
    inner = (low == 1) & (high == 2) & ((d == t) | (d == n - t))
    return rim | spoke | inner


def _serial_label(n: int, sid: int) -> str:
    return f"{_TAGS[sid // n]}{sid % n}"


def _check_ids(g: DpGraph, ids: np.ndarray, describe) -> VerificationReport:
    report = VerificationReport()
    n, t, order = g.n, g.t, g.order
    size = len(ids)
    if size != order:
        report.record("length", detail=f"expected {order} vertices, got {size}")
    if not size:
        return report

    valid = (ids >= 0) & (ids < order)
    for pos in np.flatnonzero(~valid).tolist():
        report.record("universe", pos, describe(pos), f"not a vertex of {g}")

    inside = np.flatnonzero(valid)
    counts = np.bincount(ids[inside], minlength=order)
    if counts.max(initial=0) > 1:
        _, first = np.unique(ids[inside], return_index=True)
        first_seen = np.full(order, -1, dtype=np.int64)
        first_seen[ids[inside[first]]] = inside[first]
        repeated = np.ones(len(inside), dtype=bool)
        repeated[first] = False
        for pos in inside[repeated].tolist():
            report.record("duplicate", pos, describe(pos), f"first seen at {first_seen[ids[pos]]}")

    if size >= 2:
        following = np.roll(ids, -1)
        both = valid & np.roll(valid, -1)
        broken = both & ~_linked(n, t, ids, following)
        for pos in np.flatnonzero(broken[:-1]).tolist():
            report.record("adjacency", pos, describe(pos), f"{describe(pos)} and {describe(pos + 1)} are not adjacent")
        if broken[-1]:
            last = size - 1
            report.record("closure", last, describe(last), f"{describe(last)} does not close back to {describe(0)}")
    return report


def verify_serial(g: DpGraph, ids: Sequence[int]) -> VerificationReport:
    """verify_hamilton for a cycle given as serial ids."""
    arr = np.asarray(ids, dtype=np.int64).reshape(-1)
    n, order = g.n, g.order
    return _check_ids(
        g, arr, lambda pos: _serial_label(n, int(arr[pos])) if 0 <= arr[pos] < order else repr(int(arr[pos]))
    )


def verify_hamilton(g: DpGraph, candidate: Sequence[Any]) -> VerificationReport:
    """Collect every reason the candidate is not a Hamilton cycle of g."""
    seq = list(candidate)
    n = g.n
    ids = np.array(
        [_BLOCK[v[0]] * n + v[1] if in_universe(g, v) else -1 for v in seq],
        dtype=np.int64,
    )
    return _check_ids(g, ids, lambda pos: _describe(seq[pos]))


def definition_graph(g: DpGraph) -> nx.Graph:
    """networkx graph built straight from the edge-set formulas."""
    n, t = g.n, g.t
    graph = nx.Graph()
    for i in range(n):
        graph.add_edge((Layer.X, i), (Layer.X, (i + 1) % n))
        graph.add_edge((Layer.Y, i), (Layer.Y, (i + 1) % n))
        graph.add_edge((Layer.X, i), (Layer.U, i))
        graph.add_edge((Layer.Y, i), (Layer.V, i))
        graph.add_edge((Layer.U, i), (Layer.V, (i + t) % n))
        graph.add_edge((Layer.V, i), (Layer.U, (i + t) % n))
    return graph


def definition_check(g: DpGraph, candidate: Sequence[Any]) -> bool:
    """Exhaustive definition-level acceptance, independent of verify_hamilton."""
    graph = definition_graph(g)
    seq = [tuple(v) if isinstance(v, tuple) else v for v in candidate]
    if Counter(seq) != Counter(graph.nodes):
        return False
    return all(graph.has_edge(a, b) for a, b in zip(seq, seq[1:] + seq[:1]))
