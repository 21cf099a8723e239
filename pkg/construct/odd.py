"""Odd n: the P/Q/R/S path system over an a-sequence.

With 2k+1 = gcd(n, t), the a-sequence holds one representative of each
residue class mod 2k+1, ordered a_0 < a_2 < ... < a_{2k} < a_1 < a_3 < ... < a_{2k-1}.
P_i and Q_i run along the x and y rims; R_i and S_i walk the inner cycle
of residue i forwards and backwards. Pairs (S_i P_i) and (R_i Q_i) alternate
around the cycle so that every vertex is used once.
"""
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from core import (
    ASequenceLengthError,
    ASequenceOrderError,
    ASequenceRangeError,
    ASequenceResidueError,
    ConstructionIntegrityError,
    DpGraph,
    GraphParams,
    Layer,
    ParityError,
    Vertex,
    label,
)

from .cycle import HamiltonCycle, VertexPath, glue, make_cycle, make_path


@dataclass(frozen=True)
class ASequence:
    entries: tuple[int, ...]
    k: int

    @property
    def modulus(self) -> int:
        return 2 * self.k + 1

    def __getitem__(self, i: int) -> int:
        # Subscripts live in Z_{2k+1}.
        return self.entries[i % self.modulus]

    def __len__(self) -> int:
        return len(self.entries)

    def as_list(self) -> list[int]:
        return list(self.entries)


def _require_odd(params: GraphParams) -> None:
    if not params.is_odd:
        raise ParityError(f"DP({params.n},{params.t}): the P/Q/R/S system needs odd n")


def _interleaved_order(k: int) -> list[int]:
    """Subscripts in increasing-value order: 0, 2, ..., 2k, 1, 3, ..., 2k-1."""
    return list(range(0, 2 * k + 1, 2)) + list(range(1, 2 * k, 2))


def canonical_a_sequence(params: GraphParams) -> ASequence:
    """a_{2j} = 2j and a_{2j-1} = 2k + 2j."""
    _require_odd(params)
    k = params.k
    entries = [0] * (2 * k + 1)
    for j in range(k + 1):
        entries[2 * j] = 2 * j
    for j in range(1, k + 1):
        entries[2 * j - 1] = 2 * k + 2 * j
    return ASequence(tuple(entries), k)


def validate_a_sequence(params: GraphParams, a: Sequence[int] | ASequence) -> ASequence:
    _require_odd(params)
    entries = a.as_list() if isinstance(a, ASequence) else list(a)
    n, k = params.n, params.k
    m = 2 * k + 1
    if len(entries) != m:
        raise ASequenceLengthError(f"need {m} entries for gcd {m}, got {len(entries)}")
    for i, value in enumerate(entries):
        if not 0 <= value < n:
            raise ASequenceRangeError(f"a_{i}={value} outside [0, {n})")
    order = _interleaved_order(k)
    for lo, hi in zip(order, order[1:]):
        if not entries[lo] < entries[hi]:
            raise ASequenceOrderError(
                f"a_{lo}={entries[lo]} must be smaller than a_{hi}={entries[hi]}"
            )
    for i, value in enumerate(entries):
        if value % m != i:
            raise ASequenceResidueError(f"a_{i}={value} is not congruent to {i} mod {m}")
    return ASequence(tuple(entries), k)


def random_a_sequence(params: GraphParams, rng: Optional[random.Random] = None) -> ASequence:
    """A random valid a-sequence.

    Values are drawn position by position in interleaved order, each from the
    range that still leaves room for the positions after it. Every valid
    sequence can come out, but not with equal probability.
    """
    _require_odd(params)
    rng = rng or random.Random()
    n, k = params.n, params.k
    m = 2 * k + 1
    order = _interleaved_order(k)

    upper = [0] * len(order)
    ceiling = n
    for pos in range(len(order) - 1, -1, -1):
        r = order[pos]
        ceiling = r + ((ceiling - 1 - r) // m) * m
        upper[pos] = ceiling

    entries = [0] * m
    floor = -1
    for pos, r in enumerate(order):
        lowest = r + ((floor - r) // m + 1) * m
        value = rng.randrange(lowest, upper[pos] + 1, m)
        entries[r] = value
        floor = value
    return validate_a_sequence(params, entries)


def _rim_path(g: DpGraph, a: ASequence, i: int, rim: Layer, spoke: Layer, shift: int) -> VertexPath:
    n = g.n
    start = a[i] + shift
    run = (a[i + 2] - a[i]) % n or n
    items = [Vertex(spoke, start % n)]
    items.extend(Vertex(rim, (start + j) % n) for j in range(run))
    items.append(Vertex(spoke, (start + run - 1) % n))
    return make_path(g, items)


def path_P(g: DpGraph, a: ASequence, i: int) -> VertexPath:
    """U_{a_i+t} X_{a_i+t} ... X_{a_{i+2}+t-1} U_{a_{i+2}+t-1}."""
    _require_odd(g.params)
    return _rim_path(g, a, i, Layer.X, Layer.U, g.t)


def path_Q(g: DpGraph, a: ASequence, i: int) -> VertexPath:
    """V_{a_i} Y_{a_i} ... Y_{a_{i+2}-1} V_{a_{i+2}-1}."""
    _require_odd(g.params)
    return _rim_path(g, a, i, Layer.Y, Layer.V, 0)


def _inner_walk(g: DpGraph, start: Vertex, target: Vertex, step: int) -> VertexPath:
    n = g.n
    limit = 2 * g.params.p
    current = start
    items = [current]
    while current != target:
        if len(items) >= limit:
            raise ConstructionIntegrityError(
                f"{g}: inner walk from {label(start)} missed {label(target)} within {limit} vertices"
            )
        layer = Layer.V if current.layer is Layer.U else Layer.U
        current = Vertex(layer, (current.index + step) % n)
        items.append(current)
    return make_path(g, items)


def path_R(g: DpGraph, a: ASequence, i: int) -> VertexPath:
    """U_{a_{i+1}+t-1} V_{a_{i+1}+2t-1} ... V_{a_i}, stepping +t."""
    _require_odd(g.params)
    n, t = g.n, g.t
    start = Vertex(Layer.U, (a[i + 1] + t - 1) % n)
    return _inner_walk(g, start, Vertex(Layer.V, a[i] % n), t)


def path_S(g: DpGraph, a: ASequence, i: int) -> VertexPath:
    """V_{a_{i+1}-1} U_{a_{i+1}-t-1} ... U_{a_i+t}, stepping -t."""
    _require_odd(g.params)
    n, t = g.n, g.t
    start = Vertex(Layer.V, (a[i + 1] - 1) % n)
    return _inner_walk(g, start, Vertex(Layer.U, (a[i] + t) % n), -t)


def odd_path_system(g: DpGraph, a: ASequence) -> dict[tuple[str, int], VertexPath]:
    """All 4(2k+1) paths keyed by ("P", i), ("Q", i), ("R", i), ("S", i)."""
    _require_odd(g.params)
    system: dict[tuple[str, int], VertexPath] = {}
    for i in range(a.modulus):
        system["P", i] = path_P(g, a, i)
        system["Q", i] = path_Q(g, a, i)
        system["R", i] = path_R(g, a, i)
        system["S", i] = path_S(g, a, i)
    return system


def _expect(what: str, got: Vertex, want: Vertex) -> None:
    if got != want:
        raise ConstructionIntegrityError(f"{what}: expected {label(want)}, got {label(got)}")


def _check_junctions(g: DpGraph, a: ASequence, system: dict[tuple[str, int], VertexPath]) -> None:
    n, t = g.n, g.t
    for i in range(a.modulus):
        s, p, r, q = system["S", i], system["P", i], system["R", i], system["Q", i]
        _expect(f"end(S_{i})", s.end, Vertex(Layer.U, (a[i] + t) % n))
        _expect(f"start(P_{i})", p.start, s.end)
        _expect(f"end(P_{i})", p.end, Vertex(Layer.U, (a[i + 2] + t - 1) % n))
        _expect(f"start(R_{i + 1})", system["R", (i + 1) % a.modulus].start, p.end)
        _expect(f"end(R_{i})", r.end, Vertex(Layer.V, a[i] % n))
        _expect(f"start(Q_{i})", q.start, r.end)
        _expect(f"end(Q_{i})", q.end, Vertex(Layer.V, (a[i + 2] - 1) % n))
        _expect(f"start(S_{i + 1})", system["S", (i + 1) % a.modulus].start, q.end)


def joining_order(a: ASequence) -> list[tuple[str, int]]:
    """(S_0 P_0)(R_1 Q_1)(S_2 P_2) ... (S_{2k} P_{2k}) then (R_0 Q_0)(S_1 P_1) ... (R_{2k} Q_{2k})."""
    m = a.modulus
    order: list[tuple[str, int]] = []
    for slot in range(2 * m):
        i = slot % m
        if slot % 2 == 0:
            order += [("S", i), ("P", i)]
        else:
            order += [("R", i), ("Q", i)]
    return order


def odd_hamilton(g: DpGraph, a: ASequence) -> HamiltonCycle:
    a = validate_a_sequence(g.params, a)
    system = odd_path_system(g, a)
    _check_junctions(g, a, system)
    joined = glue([system[key] for key in joining_order(a)])
    if len(joined) != g.order or len(set(joined)) != g.order:
        raise ConstructionIntegrityError(f"{g}: glued sequence has {len(set(joined))} distinct of {g.order}")
    return make_cycle(g, joined)
