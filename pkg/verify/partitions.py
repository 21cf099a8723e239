"""Executable form of the coverage argument behind the odd-n construction.

For odd n with gcd(n, t) = 2k+1 and p = n / (2k+1):
  - the P_i cover the x rim exactly once, the Q_i the y rim;
  - C_i: u_i v_{i+t} u_{i+2t} ... u_{i+(p-1)t} v_i u_{i+t} ... v_{i+(p-1)t}
    is a 2p-cycle on residue class i, and the C_i partition U and V;
  - R_i and S_i split C_i into two vertex-disjoint pieces.
"""
from dataclasses import dataclass

from core import DpGraph, Layer, ParityError, Vertex, label, layer_filter, layer_vertices

from construct import ASequence, VertexPath, odd_path_system, validate_a_sequence

from .checker import VerificationReport


@dataclass(frozen=True)
class InnerCycle:
    residue: int
    vertices: tuple[Vertex, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def _require_odd(g: DpGraph) -> None:
    if not g.params.is_odd:
        raise ParityError(f"{g}: inner cycles are defined for odd n only")


def cycle_C(g: DpGraph, i: int) -> InnerCycle:
    _require_odd(g)
    m = g.params.g
    if not 0 <= i < m:
        raise ParityError(f"{g}: residue {i} outside [0, {m})")
    n, t, p = g.n, g.t, g.params.p
    first = [Vertex(Layer.U if j % 2 == 0 else Layer.V, (i + j * t) % n) for j in range(p)]
    second = [Vertex(Layer.V if j % 2 == 0 else Layer.U, (i + j * t) % n) for j in range(p)]
    return InnerCycle(residue=i, vertices=tuple(first + second))


def split_inner_cycle(c: InnerCycle) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]]:
    """(D_i, E_i): the halves starting at U_i and at V_i."""
    half = len(c.vertices) // 2
    return c.vertices[:half], c.vertices[half:]


def inner_cycles(g: DpGraph) -> list[InnerCycle]:
    _require_odd(g)
    return [cycle_C(g, i) for i in range(g.params.g)]


def _check_rim(report: VerificationReport, g: DpGraph, paths: list[VertexPath], layer: Layer, check: str) -> None:
    covered: dict[Vertex, int] = {}
    for i, path in enumerate(paths):
        for v in layer_filter(path, layer):
            if v in covered:
                report.add(check, i, v, f"also covered by path {covered[v]}")
            else:
                covered[v] = i
    missing = [v for v in layer_vertices(g, layer) if v not in covered]
    if missing:
        report.add(check, detail=f"uncovered: {' '.join(label(v) for v in missing)}")


def check_proof_partitions(g: DpGraph, a: ASequence) -> VerificationReport:
    """Run the coverage checks; each failure names its check.

    x_partition, y_partition: rim coverage by P_i / Q_i.
    inner_partition: R_i and S_i together cover U and V exactly once.
    r_s_split: R_i, S_i disjoint with union C_i.
    inner_cycle_length: C_i has 2p distinct vertices, and p*t = lcm(n, t).
    inner_cycles_disjoint: the C_i are disjoint with 2n vertices in total.
    """
    _require_odd(g)
    a = validate_a_sequence(g.params, a)
    report = VerificationReport()
    system = odd_path_system(g, a)
    m, p = a.modulus, g.params.p

    _check_rim(report, g, [system["P", i] for i in range(m)], Layer.X, "x_partition")
    _check_rim(report, g, [system["Q", i] for i in range(m)], Layer.Y, "y_partition")

    inner_seen: dict[Vertex, str] = {}
    for i in range(m):
        for name in ("R", "S"):
            for v in system[name, i]:
                if v in inner_seen:
                    report.add("inner_partition", i, v, f"{name}_{i} repeats a vertex of {inner_seen[v]}")
                else:
                    inner_seen[v] = f"{name}_{i}"
    expected_inner = set(layer_vertices(g, Layer.U)) | set(layer_vertices(g, Layer.V))
    if set(inner_seen) != expected_inner:
        missing = sorted(expected_inner - set(inner_seen))
        report.add("inner_partition", detail=f"uncovered: {' '.join(label(v) for v in missing)}")

    cycles = inner_cycles(g)
    residue_of: dict[Vertex, int] = {}
    for c in cycles:
        for v in c.vertices:
            if v in residue_of:
                report.add("inner_cycles_disjoint", c.residue, v, f"also on C_{residue_of[v]}")
            residue_of[v] = c.residue
    if len(residue_of) != 2 * g.n:
        report.add("inner_cycles_disjoint", detail=f"union has {len(residue_of)} vertices, expected {2 * g.n}")

    for i in range(m):
        r_set, s_set = set(system["R", i]), set(system["S", i])
        if r_set & s_set:
            report.add("r_s_split", i, detail=f"R_{i} and S_{i} share {len(r_set & s_set)} vertices")
        owners = {residue_of.get(v) for v in r_set | s_set}
        if len(owners) != 1:
            report.add("r_s_split", i, detail=f"R_{i} and S_{i} span inner cycles {sorted(owners, key=str)}")
            continue
        home = cycles[owners.pop()]
        if r_set | s_set != set(home.vertices):
            report.add("r_s_split", i, detail=f"R_{i} and S_{i} do not cover C_{home.residue}")

    if p * g.t != g.params.lcm:
        report.add("inner_cycle_length", detail=f"p*t={p * g.t} differs from lcm(n,t)={g.params.lcm}")
    for c in cycles:
        if len(c.vertices) != 2 * p or len(set(c.vertices)) != 2 * p:
            report.add("inner_cycle_length", c.residue, detail=f"C_{c.residue} has {len(set(c.vertices))} distinct of {2 * p}")
    return report
