"""Edge-list and DOT encoders. Output is byte-deterministic."""
from typing import Optional

from core import DpGraph, InvalidCycleError, edges, label, vertex_from_serial, vertices

from construct import HamiltonCycle
from verify import verify_hamilton

HIGHLIGHT = 'color="red", penwidth=3'


def encode_edge_list(g: DpGraph) -> str:
    """Header "n t", then one "id1 id2" line per edge, sorted."""
    lines = [f"{g.n} {g.t}"]
    lines.extend(f"{a} {b}" for a, b in edges(g))
    return "\n".join(lines) + "\n"


def encode_dot(g: DpGraph, cycle: Optional[HamiltonCycle] = None) -> str:
    highlighted: set[tuple[int, int]] = set()
    if cycle is not None:
        report = verify_hamilton(g, cycle.vertices)
        if not report.ok:
            raise InvalidCycleError(f"cannot highlight a cycle that does not verify for {g}", report)
        highlighted = set(cycle.edges())

    lines = [f'graph "DP({g.n},{g.t})" {{']
    for v in vertices(g):
        lines.append(f'  {label(v)} [layer="{v.layer.value}"];')
    for a, b in edges(g):
        va, vb = vertex_from_serial(g, a), vertex_from_serial(g, b)
        attrs = f" [{HIGHLIGHT}]" if (a, b) in highlighted else ""
        lines.append(f"  {label(va)} -- {label(vb)}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
