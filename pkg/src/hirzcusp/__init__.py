"""Cuspidal curves on Hirzebruch surfaces: exact divisor arithmetic,
resolution lattices, SNC dual graphs, barks and cusp-count bounds."""

from hirzcusp.divisors import (
    CurveType,
    DivisorClass,
    SurfaceMismatchError,
    arithmetic_genus,
    canonical_class,
    fiber,
    is_ample_pairing_positive,
    pairing,
    section,
)
from hirzcusp.germs import (
    CuspidalConfig,
    InvalidSequenceError,
    MultiplicitySequence,
    delta_invariant,
    format_compact,
    from_compact,
    genus_of_config,
    parse_compact,
    validate_full,
)
from hirzcusp.lattice import LatticeClass, ResolutionLattice, build, dual_graph, log_class_squared
from hirzcusp.snc import Bark, SncGraph, bark_of_chain, bark_total, classify, is_negative_definite
from hirzcusp.bounds import BoundReport, KodairaVerdict, bound_report, kodaira_classify, max_cusps

__version__ = "0.1.0"

__all__ = [
    "Bark",
    "BoundReport",
    "CurveType",
    "CuspidalConfig",
    "DivisorClass",
    "InvalidSequenceError",
    "KodairaVerdict",
    "LatticeClass",
    "MultiplicitySequence",
    "ResolutionLattice",
    "SncGraph",
    "SurfaceMismatchError",
    "arithmetic_genus",
    "bark_of_chain",
    "bark_total",
    "bound_report",
    "build",
    "canonical_class",
    "classify",
    "delta_invariant",
    "dual_graph",
    "fiber",
    "format_compact",
    "from_compact",
    "genus_of_config",
    "is_ample_pairing_positive",
    "is_negative_definite",
    "kodaira_classify",
    "log_class_squared",
    "max_cusps",
    "pairing",
    "parse_compact",
    "section",
    "validate_full",
]
