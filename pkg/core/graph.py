"""Double generalized Petersen graphs DP(n, t).

The graph is never stored: adjacency follows from the index formulas

    x_i x_{i+1}, y_i y_{i+1}, x_i u_i, y_i v_i, u_i v_{i+t}, v_i u_{i+t}

with every index reduced into [0, n) at the point it is computed.
"""
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Iterable, NamedTuple, Optional

import networkx as nx
import numpy as np

from .errors import ParameterError, RimSizeError, SkipError


class Layer(str, Enum):
    """The four vertex layers, in serial-id order."""
    X = "x"
    U = "u"
    V = "v"
    Y = "y"


LAYER_ORDER = (Layer.X, Layer.U, Layer.V, Layer.Y)
_LAYER_OFFSET = {layer: pos for pos, layer in enumerate(LAYER_ORDER)}
_LAYER_BY_TAG = {layer.value: layer for layer in Layer}


class Vertex(NamedTuple):
    layer: Layer
    index: int

    def __str__(self) -> str:
        return label(self)


@dataclass(frozen=True)
class GraphParams:
    """Validated (n, t) plus the derived quantities.

    k and p are only meaningful for odd n and are None otherwise.
    """
    n: int
    t: int
    g: int
    k: Optional[int] = None
    p: Optional[int] = None

    @property
    def is_odd(self) -> bool:
        return self.n % 2 == 1

    @property
    def q(self) -> int:
        # t = q * gcd(n, t); no parity claim is made about q.
        return self.t // self.g

    @property
    def lcm(self) -> int:
        return self.n * self.t // self.g


@dataclass(frozen=True)
class DpGraph:
    params: GraphParams
    order: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "order", 4 * self.params.n)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def t(self) -> int:
        return self.params.t

    def __str__(self) -> str:
        return f"DP({self.n},{self.t})"


def make_params(n: int, t: int) -> GraphParams:
    """Validate (n, t) and derive gcd, and k, p for odd n."""
    if n < 3:
        raise RimSizeError(f"n={n} violates n >= 3")
    if t < 1:
        raise SkipError(f"t={t} violates t >= 1")
    if 2 * t >= n:
        raise SkipError(f"t={t} violates 2t < n for n={n}")
    g = gcd(n, t)
    if n % 2 == 0:
        return GraphParams(n=n, t=t, g=g)
    # g divides odd n, so g and n // g are odd as well.
    return GraphParams(n=n, t=t, g=g, k=(g - 1) // 2, p=n // g)


def make_graph(n: int, t: int) -> DpGraph:
    return DpGraph(make_params(n, t))


def valid_t_values(n: int) -> list[int]:
    """All t with 1 <= t and 2t < n."""
    return list(range(1, (n + 1) // 2))


def valid_pairs(n_min: int, n_max: int) -> list[tuple[int, int]]:
    return [(n, t) for n in range(max(3, n_min), n_max + 1) for t in valid_t_values(n)]


def neighbors(g: DpGraph, v: Vertex) -> set[Vertex]:
    n, t = g.n, g.t
    i = v.index
    if v.layer is Layer.X:
        return {Vertex(Layer.X, (i - 1) % n), Vertex(Layer.X, (i + 1) % n), Vertex(Layer.U, i)}
    if v.layer is Layer.Y:
        return {Vertex(Layer.Y, (i - 1) % n), Vertex(Layer.Y, (i + 1) % n), Vertex(Layer.V, i)}
    if v.layer is Layer.U:
        return {Vertex(Layer.X, i), Vertex(Layer.V, (i + t) % n), Vertex(Layer.V, (i - t) % n)}
    return {Vertex(Layer.Y, i), Vertex(Layer.U, (i + t) % n), Vertex(Layer.U, (i - t) % n)}


def adjacent(g: DpGraph, a: Vertex, b: Vertex) -> bool:
    return b in neighbors(g, a)


def in_universe(g: DpGraph, v) -> bool:
    return (
        isinstance(v, tuple)
        and len(v) == 2
        and isinstance(v[0], Layer)
        and isinstance(v[1], int)
        and 0 <= v[1] < g.n
    )


def layer_vertices(g: DpGraph, layer: Layer) -> list[Vertex]:
    return [Vertex(layer, i) for i in range(g.n)]


def vertices(g: DpGraph) -> list[Vertex]:
    """All 4n vertices in serial-id order."""
    return [v for layer in LAYER_ORDER for v in layer_vertices(g, layer)]


def layer_filter(items: Iterable[Vertex], layer: Layer) -> list[Vertex]:
    """Vertices of one layer, in input order (V_x, V_u, V_v, V_y on a subgraph)."""
    return [v for v in items if v.layer is layer]


def serial_id(g: DpGraph, v: Vertex) -> int:
    """X_i -> i, U_i -> n+i, V_i -> 2n+i, Y_i -> 3n+i."""
    return _LAYER_OFFSET[v.layer] * g.n + v.index


def vertex_from_serial(g: DpGraph, sid: int) -> Vertex:
    if not 0 <= sid < g.order:
        raise ParameterError(f"serial id {sid} outside [0, {g.order}) for {g}")
    block, index = divmod(sid, g.n)
    return Vertex(LAYER_ORDER[block], index)


def label(v: Vertex) -> str:
    return f"{v.layer.value}{v.index}"


def parse_label(text: str, n: int) -> Vertex:
    text = text.strip().lower()
    layer = _LAYER_BY_TAG.get(text[:1])
    if layer is None or not text[1:].isdigit():
        raise ParameterError(f"bad vertex label: {text!r}")
    index = int(text[1:])
    if index >= n:
        raise ParameterError(f"vertex label {text!r} outside Z_{n}")
    return Vertex(layer, index)


def edge_array(g: DpGraph) -> np.ndarray:
    """The 6n edges as a (6n, 2) array of serial ids, smaller id first, sorted."""
    n, t = g.n, g.t
    i = np.arange(n, dtype=np.int64)
    nxt = (i + 1) % n
    shifted = (i + t) % n
    ends = np.concatenate([
        np.stack([i, nxt], axis=1),
        np.stack([3 * n + i, 3 * n + nxt], axis=1),
        np.stack([i, n + i], axis=1),
        np.stack([2 * n + i, 3 * n + i], axis=1),
        np.stack([n + i, 2 * n + shifted], axis=1),
        np.stack([2 * n + i, n + shifted], axis=1),
    ])
    ends.sort(axis=1)
    return ends[np.lexsort((ends[:, 1], ends[:, 0]))]


def edges(g: DpGraph) -> list[tuple[int, int]]:
    """The 6n edges as (id1, id2) serial pairs with id1 < id2, sorted."""
    return [(a, b) for a, b in edge_array(g).tolist()]


def to_networkx(g: DpGraph) -> nx.Graph:
    """networkx view with serial-id nodes carrying layer/index/label attributes."""
    graph = nx.Graph(name=str(g))
    for v in vertices(g):
        graph.add_node(serial_id(g, v), layer=v.layer.value, index=v.index, label=label(v))
    graph.add_edges_from(edges(g))
    return graph
