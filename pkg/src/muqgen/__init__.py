"""Enumerate and verify plane multiquadrangulations.

Maps are stored as rotation systems over darts (half-edges); see
:class:`PlaneMap`.  Quadrangulations of order ``n`` are generated as radial
maps of plane multigraphs with ``n - 2`` edges.
"""
__version__ = "0.1.0"

from .canonical import (
    CanonicalCode,
    automorphism_count,
    canonical_code,
    canonical_form,
    is_chiral,
    is_isomorphic,
    rooted_code,
)
from .enumeration import (
    enumerate_muqs,
    enumerate_plane_multigraphs,
    filter_maps,
    muq_codes,
    radial_graph,
    rooted_count,
)
from .errors import *  # noqa: F403
from .formats import emit_planar_code, emit_rotsys, parse_planar_code, parse_rotsys, read_maps, write_maps
from .halves import Half, double_half, extract_half, halves_of, validate_half
from .oracle import brute_force_muqs
from .planemap import ParallelClass, PlaneMap
from .verify import (
    CensusRecord,
    Report,
    census,
    census_table,
    verify_min_order_8,
    verify_theorem1,
    verify_two_irreducibles,
    verify_upper_bound_14,
)

__all__ = [
    "CanonicalCode",
    "CensusRecord",
    "Half",
    "ParallelClass",
    "PlaneMap",
    "Report",
    "automorphism_count",
    "brute_force_muqs",
    "canonical_code",
    "canonical_form",
    "census",
    "census_table",
    "double_half",
    "emit_planar_code",
    "emit_rotsys",
    "enumerate_muqs",
    "enumerate_plane_multigraphs",
    "extract_half",
    "filter_maps",
    "halves_of",
    "is_chiral",
    "is_isomorphic",
    "muq_codes",
    "parse_planar_code",
    "parse_rotsys",
    "radial_graph",
    "read_maps",
    "rooted_code",
    "rooted_count",
    "validate_half",
    "verify_min_order_8",
    "verify_theorem1",
    "verify_two_irreducibles",
    "verify_upper_bound_14",
    "write_maps",
    "MuqError",
    "MapError",
    "MalformedPairing",
    "NotConnected",
    "NotGenusZero",
    "UnknownVertex",
    "NotAQuadrangulation",
    "DisconnectedResult",
    "CornersNotOnSameFace",
    "OrderTooLargeForOracle",
    "UnknownPredicate",
    "HalfError",
    "InvalidHalf",
    "MultipleMarkedEdges",
    "LowDegreeInterior",
    "NotParallel",
    "ResultNotHalf",
    "BridgeMarkedEdge",
    "VerificationError",
    "CounterexampleFound",
    "CountMismatch",
    "FixtureMismatch",
    "ConstructionFailed",
    "FormatError",
    "BadHeader",
    "TruncatedRecord",
    "AmbiguousMultiedgePairing",
    "NonPlanarPairing",
    "RotsysSyntaxError",
    "InconsistentIncidence",
]
