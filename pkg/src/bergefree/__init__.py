"""Toolkit for constructing, detecting, and verifying Berge-C4-free hypergraphs."""

from .berge import (
    BergeCycleWitness,
    find_berge_cycle,
    find_c4_in_graph,
    find_triangle,
    is_berge_c4_free,
    naive_berge_oracle,
    validate_witness,
)
from .constructions import (
    BlowupCertificate,
    LowerBoundConstruction,
    PlaneIncidence,
    blow_up,
    certify_blowup_free,
    is_prime,
    lower_bound_construction,
    projective_plane_incidence,
    theoretical_bounds,
)
from .core import (
    BipartiteGraph,
    ColoredGraph,
    Digraph,
    FormatError,
    Graph,
    Hypergraph,
    degree_stats,
    load_hypergraph,
    neighborhoods,
    save_hypergraph,
    shadow,
    weight,
)
from .embedding import (
    AuxBundle,
    Decomposition,
    LemmaSuiteReport,
    NonNeighborError,
    NotBergeC4FreeError,
    ObservationReport,
    SharedColorError,
    build_D,
    build_aux_bundle,
    build_embedded_graph,
    decompose_hyperedge,
    validate_decomposition,
    verify_lemma_suite,
    verify_observation1,
)
from .generators import random_greedy_hypergraph
from .patterns import F1, F2, Pattern, contains_kst, contains_pattern
from .search import (
    SearchResult,
    SearchState,
    candidate_universe,
    compare_to_bounds,
    incremental_c4_check,
    max_weight_exact,
)

__version__ = "0.1.0"

__all__ = [
    "AuxBundle",
    "BergeCycleWitness",
    "BipartiteGraph",
    "BlowupCertificate",
    "ColoredGraph",
    "Decomposition",
    "Digraph",
    "F1",
    "F2",
    "FormatError",
    "Graph",
    "Hypergraph",
    "LemmaSuiteReport",
    "LowerBoundConstruction",
    "NonNeighborError",
    "NotBergeC4FreeError",
    "ObservationReport",
    "Pattern",
    "PlaneIncidence",
    "SearchResult",
    "SearchState",
    "SharedColorError",
    "blow_up",
    "build_D",
    "build_aux_bundle",
    "build_embedded_graph",
    "candidate_universe",
    "certify_blowup_free",
    "compare_to_bounds",
    "contains_kst",
    "contains_pattern",
    "decompose_hyperedge",
    "degree_stats",
    "find_berge_cycle",
    "find_c4_in_graph",
    "find_triangle",
    "incremental_c4_check",
    "is_berge_c4_free",
    "is_prime",
    "load_hypergraph",
    "lower_bound_construction",
    "max_weight_exact",
    "naive_berge_oracle",
    "neighborhoods",
    "projective_plane_incidence",
    "random_greedy_hypergraph",
    "save_hypergraph",
    "shadow",
    "theoretical_bounds",
    "validate_decomposition",
    "validate_witness",
    "verify_lemma_suite",
    "verify_observation1",
    "weight",
]
