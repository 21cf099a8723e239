# Serialization formats
from .certificate import (
    Construction,
    CycleCertificate,
    certificate_for,
    decode_certificate,
    dump_certificate,
    encode_certificate,
)
from .text import encode_dot, encode_edge_list

__all__ = [
    "Construction",
    "CycleCertificate",
    "certificate_for",
    "dump_certificate",
    "encode_certificate",
    "decode_certificate",
    "encode_dot",
    "encode_edge_list",
]
