# Graph core
from .errors import (
    DpGraphError,
    ParameterError,
    RimSizeError,
    SkipError,
    ParityError,
    ASequenceError,
    ASequenceLengthError,
    ASequenceResidueError,
    ASequenceOrderError,
    ASequenceRangeError,
    ConstructionIntegrityError,
    SearchBudgetExceeded,
    InvalidCycleError,
    CertificateSyntaxError,
    CertificateVerificationError,
)
from .graph import (
    Layer,
    LAYER_ORDER,
    Vertex,
    GraphParams,
    DpGraph,
    make_params,
    make_graph,
    valid_t_values,
    valid_pairs,
    neighbors,
    adjacent,
    in_universe,
    layer_vertices,
    vertices,
    layer_filter,
    serial_id,
    vertex_from_serial,
    label,
    parse_label,
    edge_array,
    edges,
    to_networkx,
)
from .records import PairOutcome, SweepRun

__all__ = [
    "DpGraphError",
    "ParameterError",
    "RimSizeError",
    "SkipError",
    "ParityError",
    "ASequenceError",
    "ASequenceLengthError",
    "ASequenceResidueError",
    "ASequenceOrderError",
    "ASequenceRangeError",
    "ConstructionIntegrityError",
    "SearchBudgetExceeded",
    "InvalidCycleError",
    "CertificateSyntaxError",
    "CertificateVerificationError",
    "Layer",
    "LAYER_ORDER",
    "Vertex",
    "GraphParams",
    "DpGraph",
    "make_params",
    "make_graph",
    "valid_t_values",
    "valid_pairs",
    "neighbors",
    "adjacent",
    "in_universe",
    "layer_vertices",
    "vertices",
    "layer_filter",
    "serial_id",
    "vertex_from_serial",
    "label",
    "parse_label",
    "edge_array",
    "edges",
    "to_networkx",
    "PairOutcome",
    "SweepRun",
]
