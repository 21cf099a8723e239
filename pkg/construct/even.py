"""Even n: n/2 ladder paths of nine vertices glued end to start."""
from core import DpGraph, Layer, ParityError, Vertex

from .cycle import HamiltonCycle, VertexPath, glue, make_cycle, make_path


def _require_even(g: DpGraph) -> None:
    if g.n % 2:
        raise ParityError(f"{g}: ladder paths need even n")


def even_ladder_path(g: DpGraph, i: int) -> VertexPath:
    """U_{2i} X_{2i} X_{2i+1} U_{2i+1} V_{2i+1-t} Y_{2i+1-t} Y_{2i+2-t} V_{2i+2-t} U_{2i+2}."""
    _require_even(g)
    if not 0 <= i < g.n // 2:
        raise ParityError(f"{g}: ladder index {i} outside [0, {g.n // 2})")
    n, t = g.n, g.t
    a = 2 * i
    steps = [
        (Layer.U, a),
        (Layer.X, a),
        (Layer.X, a + 1),
        (Layer.U, a + 1),
        (Layer.V, a + 1 - t),
        (Layer.Y, a + 1 - t),
        (Layer.Y, a + 2 - t),
        (Layer.V, a + 2 - t),
        (Layer.U, a + 2),
    ]
    return make_path(g, [Vertex(layer, index % n) for layer, index in steps])


def even_ladder_paths(g: DpGraph) -> list[VertexPath]:
    _require_even(g)
    return [even_ladder_path(g, i) for i in range(g.n // 2)]


def even_hamilton(g: DpGraph) -> HamiltonCycle:
    return make_cycle(g, glue(even_ladder_paths(g)))
