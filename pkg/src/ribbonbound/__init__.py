"""Disc-band codes for ribbon surfaces and certified double slice genus bounds."""

from .bounds import (
    BoundCertificate,
    BoundReport,
    band_count_bound,
    bound_report,
    class_graph_connected,
    genus_of_certificate,
    refined_bound,
    render_report,
)
from .freegroup import (
    ClassMap,
    Letter,
    Word,
    apply_class_map,
    format_word,
    free_reduce,
    is_identity,
    parse_word,
    word_from_ints,
)
from .model import (
    Band,
    ParseError,
    RibbonCode,
    SurfaceStats,
    parse_ribbon_code,
    serialize_ribbon_code,
    stats,
    validate,
)
from .oracle import GenSpec, brute_refined, confluence_check, euler_double_genus, random_code
from .partitions import DiscPartition, enumerate_partitions
from .reduction import CancelStep, CancelTrace, cancel_band, reduce_code, render_trace

__version__ = "0.1.0"

__all__ = [
    "Band",
    "BoundCertificate",
    "BoundReport",
    "CancelStep",
    "CancelTrace",
    "ClassMap",
    "DiscPartition",
    "GenSpec",
    "Letter",
    "ParseError",
    "RibbonCode",
    "SurfaceStats",
    "Word",
    "apply_class_map",
    "band_count_bound",
    "bound_report",
    "brute_refined",
    "cancel_band",
    "class_graph_connected",
    "confluence_check",
    "enumerate_partitions",
    "euler_double_genus",
    "format_word",
    "free_reduce",
    "genus_of_certificate",
    "is_identity",
    "parse_ribbon_code",
    "parse_word",
    "random_code",
    "reduce_code",
    "refined_bound",
    "render_report",
    "render_trace",
    "serialize_ribbon_code",
    "stats",
    "validate",
    "word_from_ints",
]
