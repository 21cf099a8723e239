"""Paths, Hamilton cycles and the gluing that joins paths into cycles."""
from dataclasses import dataclass
from typing import Sequence

from core import LAYER_ORDER, ConstructionIntegrityError, DpGraph, Layer, Vertex, adjacent, label, serial_id


@dataclass(frozen=True)
class VertexPath:
    """A simple path in a DpGraph; consecutive vertices are adjacent."""
    vertices: tuple[Vertex, ...]

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def labels(self) -> list[str]:
        return [label(v) for v in self.vertices]


@dataclass(frozen=True)
class HamiltonCycle:
    """A closed sequence of all 4n vertices; the closing edge is implicit.

    Cycles built here are always in canonical form: rotated to start at X_0
    and oriented toward the smaller-serial of X_0's two cycle neighbours.
    """
    graph: DpGraph
    vertices: tuple[Vertex, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def labels(self) -> list[str]:
        return [label(v) for v in self.vertices]

    def serial_ids(self) -> list[int]:
        return [serial_id(self.graph, v) for v in self.vertices]

    def edges(self) -> list[tuple[int, int]]:
        ids = self.serial_ids()
        pairs = {tuple(sorted((a, b))) for a, b in zip(ids, ids[1:] + ids[:1])}
        return sorted(pairs)


def make_path(g: DpGraph, items: Sequence[Vertex]) -> VertexPath:
    """Build a VertexPath, raising if the sequence is not a simple path of g."""
    if not items:
        raise ConstructionIntegrityError("empty path")
    if len(set(items)) != len(items):
        raise ConstructionIntegrityError(f"path repeats a vertex: {[label(v) for v in items]}")
    for a, b in zip(items, items[1:]):
        if not adjacent(g, a, b):
            raise ConstructionIntegrityError(f"{label(a)} and {label(b)} are not adjacent in {g}")
    return VertexPath(tuple(items))


def glue(paths: Sequence[VertexPath]) -> list[Vertex]:
    """Join paths end-to-start into a closed vertex sequence.

    Each path must start where the previous one ended, and the last must end
    where the first starts; shared endpoints appear once.
    """
    if not paths:
        return []
    joined = list(paths[0].vertices)
    for prev, path in zip(paths, paths[1:]):
        if path.start != prev.end:
            raise ConstructionIntegrityError(
                f"junction mismatch: path ends at {label(prev.end)}, next starts at {label(path.start)}"
            )
        joined.extend(path.vertices[1:])
    if paths[-1].end != paths[0].start:
        raise ConstructionIntegrityError(
            f"cycle does not close: ends at {label(paths[-1].end)}, starts at {label(paths[0].start)}"
        )
    joined.pop()
    return joined


def canonicalize(g: DpGraph, items: Sequence[Vertex]) -> tuple[Vertex, ...]:
    """Rotate to start at X_0, then orient toward the smaller-serial neighbour."""
    seq = list(items)
    start = Vertex(Layer.X, 0)
    if start not in seq:
        raise ConstructionIntegrityError("cycle does not contain x0")
    pos = seq.index(start)
    seq = seq[pos:] + seq[:pos]
    if len(seq) > 2 and serial_id(g, seq[-1]) < serial_id(g, seq[1]):
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


def make_cycle(g: DpGraph, items: Sequence[Vertex]) -> HamiltonCycle:
    return HamiltonCycle(graph=g, vertices=canonicalize(g, items))


def cycle_from_ids(g: DpGraph, ids: Sequence[int]) -> HamiltonCycle:
    """Wrap an already canonical serial-id cycle."""
    n = g.n
    return HamiltonCycle(graph=g, vertices=tuple(Vertex(LAYER_ORDER[sid // n], sid % n) for sid in ids))
