# Hamilton cycle construction
from typing import Optional, Sequence

import numpy as np

from core import DpGraph, ParityError, make_graph

from .cycle import HamiltonCycle, VertexPath, canonicalize, cycle_from_ids, glue, make_cycle, make_path
from .even import even_hamilton, even_ladder_path, even_ladder_paths
from .odd import (
    ASequence,
    canonical_a_sequence,
    joining_order,
    odd_hamilton,
    odd_path_system,
    path_P,
    path_Q,
    path_R,
    path_S,
    random_a_sequence,
    validate_a_sequence,
)
from .serial import canonical_ids, even_cycle_ids, odd_cycle_ids

EVEN_LADDER = "even_ladder"
ODD_PQRS = "odd_pqrs"


def construction_name(g: DpGraph) -> str:
    return ODD_PQRS if g.params.is_odd else EVEN_LADDER


def cycle_ids(g: DpGraph, a: Optional[Sequence[int] | ASequence] = None) -> tuple[np.ndarray, Optional[ASequence]]:
    """Canonical serial-id cycle for g and the a-sequence used (None for even n)."""
    if not g.params.is_odd:
        if a is not None:
            raise ParityError(f"{g}: a-sequences apply to odd n only")
        return even_cycle_ids(g), None
    seq = canonical_a_sequence(g.params) if a is None else validate_a_sequence(g.params, a)
    return odd_cycle_ids(g, seq), seq


def build_cycle(g: DpGraph, a: Optional[Sequence[int] | ASequence] = None) -> tuple[HamiltonCycle, Optional[ASequence]]:
    """Construct the cycle for g and report the a-sequence used (None for even n)."""
    ids, seq = cycle_ids(g, a)
    return cycle_from_ids(g, ids.tolist()), seq


def hamilton_cycle(n: int, t: int) -> HamiltonCycle:
    """Every DP(n, t) is Hamiltonian; this builds one of its cycles."""
    cycle, _ = build_cycle(make_graph(n, t))
    return cycle


__all__ = [
    "HamiltonCycle",
    "VertexPath",
    "ASequence",
    "EVEN_LADDER",
    "ODD_PQRS",
    "canonicalize",
    "glue",
    "make_cycle",
    "make_path",
    "even_hamilton",
    "even_ladder_path",
    "even_ladder_paths",
    "canonical_a_sequence",
    "validate_a_sequence",
    "random_a_sequence",
    "path_P",
    "path_Q",
    "path_R",
    "path_S",
    "odd_path_system",
    "joining_order",
    "odd_hamilton",
    "canonical_ids",
    "even_cycle_ids",
    "odd_cycle_ids",
    "cycle_ids",
    "cycle_from_ids",
    "construction_name",
    "build_cycle",
    "hamilton_cycle",
]
