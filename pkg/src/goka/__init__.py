"""Global offensive k-alliances in digraphs.

A set S of vertices is a global offensive k-alliance when every vertex
outside S has an in-neighbor in S and at least k more in-neighbors inside
S than outside.  This package verifies such sets, computes their minimum
size exactly at desk scale, evaluates closed-form bounds, generates the
structured families where the bounds are tight, and carries the
exact-cover reduction showing the decision problem hard on bipartite
digraphs.
"""

from .alliances import AllianceCertificate, Violation, is_dominating, verify_goka, verify_goka_undirected
from .bounds import (
    BoundsReport,
    bipartite_upper_bound,
    bounds_report,
    degree_lower_bound,
    graph_degree_bound,
    graph_parity_bound,
)
from .digraph import (
    ClassReport,
    DegreeSummary,
    Digraph,
    DigraphError,
    UniverseMismatchError,
    VertexSet,
    bidirect,
    classify,
    converse,
    cut_size,
    degree_summary,
    reachability,
)
from .ec3s import (
    Ec3sInstance,
    ReductionOutput,
    alliance_to_cover,
    cover_to_alliance,
    exact_cover_exists,
    find_no_cover_instance,
    reduce_instance,
    validate_ec3s,
)
from .families import (
    FunctionalDecomposition,
    TightnessWitness,
    certify_tightness,
    construct_go1a_functional,
    gen_bipartite_sharpness,
    gen_cycle_with_tails,
    gen_gap_cycle,
    gen_gap_tree,
    gen_tight_cycle,
    random_family,
)
from .io import FormatError, format_digraph, parse_digraph, read_digraph, write_digraph
from .solver import SolveResult, greedy_goka, min_dominating_exact, min_goka_exact, min_goka_naive

__all__ = [
    "AllianceCertificate",
    "BoundsReport",
    "ClassReport",
    "DegreeSummary",
    "Digraph",
    "DigraphError",
    "Ec3sInstance",
    "FormatError",
    "FunctionalDecomposition",
    "ReductionOutput",
    "SolveResult",
    "TightnessWitness",
    "UniverseMismatchError",
    "VertexSet",
    "Violation",
    "alliance_to_cover",
    "bidirect",
    "bipartite_upper_bound",
    "bounds_report",
    "certify_tightness",
    "classify",
    "construct_go1a_functional",
    "converse",
    "cover_to_alliance",
    "cut_size",
    "degree_lower_bound",
    "degree_summary",
    "exact_cover_exists",
    "find_no_cover_instance",
    "format_digraph",
    "gen_bipartite_sharpness",
    "gen_cycle_with_tails",
    "gen_gap_cycle",
    "gen_gap_tree",
    "gen_tight_cycle",
    "graph_degree_bound",
    "graph_parity_bound",
    "greedy_goka",
    "is_dominating",
    "min_dominating_exact",
    "min_goka_exact",
    "min_goka_naive",
    "parse_digraph",
    "random_family",
    "read_digraph",
    "reduce_instance",
    "reachability",
    "validate_ec3s",
    "verify_goka",
    "verify_goka_undirected",
    "write_digraph",
]
