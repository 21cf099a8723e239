# Verification
from .checker import Finding, VerificationReport, definition_check, definition_graph, verify_hamilton, verify_serial
from .partitions import InnerCycle, check_proof_partitions, cycle_C, inner_cycles, split_inner_cycle

__all__ = [
    "Finding",
    "VerificationReport",
    "verify_hamilton",
    "verify_serial",
    "definition_graph",
    "definition_check",
    "InnerCycle",
    "cycle_C",
    "split_inner_cycle",
    "inner_cycles",
    "check_proof_partitions",
]
