"""Opetopes as reduced opetopic directed complexes and as network sequences."""

from ._opetope import (
    Complex,
    OpetopeError,
    Sequence,
    atomic_subcomplex,
    canonical_atom,
    classify,
    complex_of,
    is_loop_free,
    iso_complexes,
    iso_sequences,
    networks_of,
    random_opetope,
    reduce,
    sources,
    target,
    to_dot,
    validate_fadc,
    validate_sequence,
)


def load(path):
    """Read a .odc (complex) or .ops (sequence) document."""
    with open(path, encoding="utf-8") as f:
        text = f.read()
    if '"networks"' in text:
        return Sequence.from_json(text)
    return Complex.from_json(text)


__all__ = [
    "Complex",
    "OpetopeError",
    "Sequence",
    "atomic_subcomplex",
    "canonical_atom",
    "classify",
    "complex_of",
    "is_loop_free",
    "iso_complexes",
    "iso_sequences",
    "load",
    "networks_of",
    "random_opetope",
    "reduce",
    "sources",
    "target",
    "to_dot",
    "validate_fadc",
    "validate_sequence",
]
