"""Finite ring property deciders, backed by the C++ core."""

from ._core import (
    RingException,
    __version__,
    check,
    paper_example_ids,
    property_ids,
    ring_info,
    structure_sets,
    suite_checks,
)

__all__ = [
    "RingException",
    "__version__",
    "check",
    "paper_example_ids",
    "property_ids",
    "ring_info",
    "structure_sets",
    "suite_checks",
]
