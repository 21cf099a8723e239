"""Brute-force Hamilton cycle search used to cross-check the constructions.

Plain backtracking over serial ids, anchored at X_0. Neighbours are tried in
increasing serial order. A branch is cut as soon as some unvisited vertex has
fewer than two neighbours that are unvisited or a path endpoint.
"""
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from core import (
    DpGraph,
    Layer,
    ParameterError,
    SearchBudgetExceeded,
    Vertex,
    label,
    make_graph,
    neighbors,
    serial_id,
    vertex_from_serial,
    vertices,
)

from construct import HamiltonCycle, build_cycle, make_cycle
from verify import verify_hamilton

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 48
    max_steps: int = 10**8

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_steps < 1:
            raise ParameterError(
                f"search budget must be positive, got max_vertices={self.max_vertices}, max_steps={self.max_steps}"
            )


@dataclass(frozen=True)
class SearchResult:
    cycle: Optional[HamiltonCycle]
    steps: int


class _Search:
    def __init__(self, g: DpGraph, budget: SearchBudget):
        self.g = g
        self.budget = budget
        self.order = g.order
        self.adj = [
            sorted(serial_id(g, w) for w in neighbors(g, v))
            for v in vertices(g)
        ]
        self.visited = [False] * self.order
        self.path: list[int] = []
        self.steps = 0

    def _available(self, u: int, end: int) -> int:
        start = self.path[0]
        return sum(1 for w in self.adj[u] if not self.visited[w] or w == start or w == end)

    def _dead_end(self, prev_end: int, end: int) -> bool:
        # Only neighbours of the vertex that just became interior lost an option.
        if prev_end == self.path[0]:
            return False
        return any(
            not self.visited[u] and self._available(u, end) < 2
            for u in self.adj[prev_end]
        )

    def _push(self, v: int) -> None:
        self.visited[v] = True
        self.path.append(v)

    def _pop(self) -> None:
        self.visited[self.path.pop()] = False

    def run(self, seed: Sequence[int]) -> Optional[list[int]]:
        for v in seed:
            self._push(v)
        return self._extend()

    def _extend(self) -> Optional[list[int]]:
        end = self.path[-1]
        if len(self.path) == self.order:
            return list(self.path) if self.path[0] in self.adj[end] else None
        for w in self.adj[end]:
            if self.visited[w]:
                continue
            self.steps += 1
            if self.steps > self.budget.max_steps:
                raise SearchBudgetExceeded(
                    f"{self.g}: search exceeded {self.budget.max_steps} steps", steps=self.steps
                )
            self._push(w)
            if not self._dead_end(end, w):
                found = self._extend()
                if found is not None:
                    return found
            self._pop()
        return None


def _seed_ids(g: DpGraph, seed: Optional[Sequence[Vertex]]) -> list[int]:
    anchor = Vertex(Layer.X, 0)
    if not seed:
        return [serial_id(g, anchor)]
    seq = list(seed)
    if seq[0] != anchor:
        raise ParameterError(f"seed path must start at {label(anchor)}, got {label(seq[0])}")
    if len(set(seq)) != len(seq):
        raise ParameterError("seed path repeats a vertex")
    for a, b in zip(seq, seq[1:]):
        if b not in neighbors(g, a):
            raise ParameterError(f"seed path breaks at {label(a)} -> {label(b)}")
    return [serial_id(g, v) for v in seq]


def search_hamilton(
    g: DpGraph,
    budget: Optional[SearchBudget] = None,
    seed: Optional[Sequence[Vertex]] = None,
) -> SearchResult:
    """Like brute_force_hamilton but also reports how many steps were used."""
    budget = budget or SearchBudget()
    if g.order > budget.max_vertices:
        raise ParameterError(f"{g} has {g.order} vertices, over the search cap of {budget.max_vertices}")
    search = _Search(g, budget)
    limit = sys.getrecursionlimit()
    if g.order + 100 > limit:
        sys.setrecursionlimit(g.order + 100)
    try:
        found = search.run(_seed_ids(g, seed))
    finally:
        sys.setrecursionlimit(limit)
    if found is None:
        logger.debug("%s: exhaustive search found no cycle in %d steps", g, search.steps)
        return SearchResult(cycle=None, steps=search.steps)
    cycle = make_cycle(g, [vertex_from_serial(g, sid) for sid in found])
    logger.debug("%s: search found a cycle in %d steps", g, search.steps)
    return SearchResult(cycle=cycle, steps=search.steps)


def brute_force_hamilton(
    g: DpGraph,
    budget: Optional[SearchBudget] = None,
    seed: Optional[Sequence[Vertex]] = None,
) -> Optional[HamiltonCycle]:
    """Some Hamilton cycle of g, or None once the search space is exhausted.

    Raises SearchBudgetExceeded when max_steps runs out first, which is not
    the same as proving that no cycle exists.
    """
    return search_hamilton(g, budget, seed).cycle


def agreement_check(n: int, t: int, budget: Optional[SearchBudget] = None) -> bool:
    """True iff the search finds a cycle and the constructed cycle verifies."""
    g = make_graph(n, t)
    found = brute_force_hamilton(g, budget)
    if found is None or not verify_hamilton(g, found.vertices).ok:
        return False
    constructed, _ = build_cycle(g)
    return verify_hamilton(g, constructed.vertices).ok
