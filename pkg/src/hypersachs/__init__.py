"""Exact codegree coefficients of hypergraph characteristic polynomials.

Computes the coefficients of the adjacency characteristic polynomial of a
k-uniform hypergraph through the Veblen-hypergraph expansion: enumerating
Veblen infragraphs of a host, evaluating their associated coefficients from
Euler orientations and arborescence counts, and assembling traces and
coefficients in exact rational arithmetic.
"""

from .hypergraph import (
    MultiHypergraph,
    SimpleHypergraph,
    components,
    flatten,
    is_veblen,
    veblen_partitions,
)
from .canon import AutReport, CanonicalCode, automorphisms, canonical_form
from .digraph import MultiDigraph, arborescence_count, euler_circuit_count, is_eulerian
from .rooting import (
    EulerOrientation,
    assoc_coeff,
    assoc_coeff_connected,
    euler_orientations,
)
from .veblen_enum import (
    IsoClassRecord,
    OccurrenceCount,
    connected_infragraph_classes,
    count_all_veblen,
    count_infragraph,
    enumerate_connected_veblen,
)
from .traces import (
    CoefficientTable,
    TraceVector,
    codegree_coefficients,
    trace_bruteforce,
    trace_d,
    trace_vector,
)
from .simplex import SimplexCoefficientReport, asymptotic_report, simplex_Ck
from .classical import (
    ElementarySubgraph,
    ThresholdReport,
    charpoly_graph,
    graph_assoc_coeff,
    harary_sachs_coeffs,
    partition_sum_check,
    threshold_search,
    threshold_single_edge,
)
from .formats import (
    HypergraphDocument,
    emit_table,
    parse_document,
    parse_hypergraph,
    serialize_document,
    serialize_hypergraph,
)

__version__ = "0.1.0"

__all__ = [
    "MultiHypergraph",
    "SimpleHypergraph",
    "flatten",
    "components",
    "is_veblen",
    "veblen_partitions",
    "CanonicalCode",
    "AutReport",
    "canonical_form",
    "automorphisms",
    "MultiDigraph",
    "is_eulerian",
    "arborescence_count",
    "euler_circuit_count",
    "EulerOrientation",
    "euler_orientations",
    "assoc_coeff",
    "assoc_coeff_connected",
    "IsoClassRecord",
    "OccurrenceCount",
    "enumerate_connected_veblen",
    "count_all_veblen",
    "connected_infragraph_classes",
    "count_infragraph",
    "TraceVector",
    "CoefficientTable",
    "trace_d",
    "trace_vector",
    "trace_bruteforce",
    "codegree_coefficients",
    "SimplexCoefficientReport",
    "simplex_Ck",
    "asymptotic_report",
    "ElementarySubgraph",
    "ThresholdReport",
    "charpoly_graph",
    "harary_sachs_coeffs",
    "graph_assoc_coeff",
    "partition_sum_check",
    "threshold_single_edge",
    "threshold_search",
    "HypergraphDocument",
    "parse_document",
    "parse_hypergraph",
    "serialize_document",
    "serialize_hypergraph",
    "emit_table",
    "__version__",
]
