"""JSON cycle certificates.

A certificate records (n, t), how the cycle was obtained, the a-sequence for
odd-n constructions and the cycle as 4n serial ids. Decoding always
re-verifies the cycle.
"""
import json
from enum import Enum
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, ValidationError

from core import (
    ASequenceError,
    CertificateSyntaxError,
    CertificateVerificationError,
    DpGraph,
    ParameterError,
    make_graph,
)

from construct import ASequence, HamiltonCycle, validate_a_sequence
from verify import verify_hamilton, verify_serial


class Construction(str, Enum):
    EVEN_LADDER = "even_ladder"
    ODD_PQRS = "odd_pqrs"
    BRUTE_FORCE = "brute_force"


class CycleCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", strict=True)

    n: int
    t: int
    construction: Construction
    a_sequence: Optional[list[int]] = None
    cycle: list[int]


def certificate_for(
    cycle: HamiltonCycle,
    construction: Construction | str,
    a_sequence: Optional[Sequence[int] | ASequence] = None,
) -> CycleCertificate:
    g = cycle.graph
    report = verify_hamilton(g, cycle.vertices)
    if not report.ok:
        raise CertificateVerificationError(f"refusing to certify a cycle that does not verify for {g}", report)
    if isinstance(a_sequence, ASequence):
        a_sequence = a_sequence.as_list()
    return CycleCertificate(
        n=g.n,
        t=g.t,
        construction=Construction(construction),
        a_sequence=list(a_sequence) if a_sequence is not None else None,
        cycle=cycle.serial_ids(),
    )


def dump_certificate(cert: CycleCertificate) -> str:
    return json.dumps(cert.model_dump(mode="json"), separators=(", ", ": ")) + "\n"


def encode_certificate(
    cycle: HamiltonCycle,
    construction: Construction | str,
    a_sequence: Optional[Sequence[int] | ASequence] = None,
) -> str:
    return dump_certificate(certificate_for(cycle, construction, a_sequence))


def _check_shape(cert: CycleCertificate) -> DpGraph:
    try:
        g = make_graph(cert.n, cert.t)
    except ParameterError as exc:
        raise CertificateSyntaxError(f"bad parameters: {exc}") from exc
    if len(cert.cycle) != g.order:
        raise CertificateSyntaxError(f"cycle lists {len(cert.cycle)} ids, DP({g.n},{g.t}) needs {g.order}")
    bad = [sid for sid in cert.cycle if not 0 <= sid < g.order]
    if bad:
        raise CertificateSyntaxError(f"serial ids out of range [0, {g.order}): {bad[:5]}")

    odd = g.params.is_odd
    if cert.construction is Construction.EVEN_LADDER and odd:
        raise CertificateSyntaxError("even_ladder construction needs even n")
    if cert.construction is Construction.ODD_PQRS and not odd:
        raise CertificateSyntaxError("odd_pqrs construction needs odd n")
    if cert.a_sequence is not None:
        if not odd:
            raise CertificateSyntaxError("a_sequence is only meaningful for odd n")
        try:
            validate_a_sequence(g.params, cert.a_sequence)
        except ASequenceError as exc:
            raise CertificateSyntaxError(f"bad a_sequence: {exc}") from exc
    elif cert.construction is Construction.ODD_PQRS:
        raise CertificateSyntaxError("odd_pqrs certificate must record its a_sequence")
    return g


def decode_certificate(text: str) -> CycleCertificate:
    """Parse and verify a certificate.

    Fields are strict: "7" is not an int and 1.0 is not a serial id.

    Raises CertificateSyntaxError for malformed input and
    CertificateVerificationError when the cycle itself is wrong.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateSyntaxError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise CertificateSyntaxError("certificate must be a JSON object")
    try:
        cert = CycleCertificate.model_validate_json(text)
    except ValidationError as exc:
        raise CertificateSyntaxError(f"certificate fields: {exc}") from exc

    g = _check_shape(cert)
    report = verify_serial(g, cert.cycle)
    if not report.ok:
        raise CertificateVerificationError(f"certificate cycle does not verify for DP({g.n},{g.t})", report)
    return cert
