"""Clique-difference structure of nested graph chains.

Build chains of strictly nested graphs, derive the graph on chain indices
whose edges mark clique differences, extract certified independent sets
with proven size floors, compare them against exact exhaustive oracles,
and search for chains with a small independence ratio.
"""

from .chains import (
    CHAIN_FORMAT,
    GraphChain,
    SINGLE_STEP,
    StepDistribution,
    enumerate_chains,
    random_chain,
    read_chain,
    relabel_chain,
    reverse_chain,
    validate_chain,
    write_chain,
)
from .derived import (
    ABCD_SCAN_LIMIT,
    DGRAPH_FORMAT,
    DifferenceGraph,
    LemmaViolation,
    build_difference_graph,
    difference_graph_from_edges,
    find_triangle,
    neighbor_counts,
    read_difference_graph,
    verify_lemma_123,
    verify_lemma_abcd,
    write_difference_graph,
)
from .graphs import (
    EdgeSet,
    Graph,
    MAX_VERTICES,
    edge_difference,
    is_clique,
    is_subgraph,
    make_graph,
)
from .oracle import (
    FAMILY_CUTOFF,
    FAMILY_FORMAT,
    FamilyReport,
    MIS_CUTOFF,
    NAIVE_CUTOFF,
    ORACLE_FORMAT,
    OracleReport,
    THEOREM_FORMAT,
    TheoremReport,
    family_has_clique_pair,
    max_cliquepair_free_family,
    max_independent_set,
    naive_max_independent_set,
    verify_theorem_exhaustive,
    write_family_report,
    write_oracle_report,
    write_theorem_report,
)
from .rng import SplitMix64
from .search import (
    RECORD_FORMAT,
    SearchConfig,
    SearchRecord,
    append_record,
    load_records,
    local_search_min_ratio,
    write_record,
)
from .witness import (
    METHODS,
    TripleChoice,
    TripleSelection,
    WITNESS_FORMAT,
    WitnessSet,
    alon_guarantee,
    alon_witness,
    best_witness,
    check_independent,
    greedy_good_witness,
    greedy_guarantee,
    read_witness,
    select_triples,
    triple_choice_violated,
    write_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ABCD_SCAN_LIMIT",
    "CHAIN_FORMAT",
    "DGRAPH_FORMAT",
    "DifferenceGraph",
    "EdgeSet",
    "FAMILY_CUTOFF",
    "FAMILY_FORMAT",
    "FamilyReport",
    "Graph",
    "GraphChain",
    "LemmaViolation",
    "MAX_VERTICES",
    "METHODS",
    "MIS_CUTOFF",
    "NAIVE_CUTOFF",
    "ORACLE_FORMAT",
    "OracleReport",
    "RECORD_FORMAT",
    "SINGLE_STEP",
    "SearchConfig",
    "SearchRecord",
    "SplitMix64",
    "StepDistribution",
    "THEOREM_FORMAT",
    "TheoremReport",
    "TripleChoice",
    "TripleSelection",
    "WITNESS_FORMAT",
    "WitnessSet",
    "alon_guarantee",
    "alon_witness",
    "append_record",
    "best_witness",
    "build_difference_graph",
    "check_independent",
    "difference_graph_from_edges",
    "edge_difference",
    "enumerate_chains",
    "family_has_clique_pair",
    "find_triangle",
    "greedy_good_witness",
    "greedy_guarantee",
    "is_clique",
    "is_subgraph",
    "load_records",
    "local_search_min_ratio",
    "make_graph",
    "max_cliquepair_free_family",
    "max_independent_set",
    "naive_max_independent_set",
    "neighbor_counts",
    "random_chain",
    "read_chain",
    "read_difference_graph",
    "read_witness",
    "relabel_chain",
    "reverse_chain",
    "select_triples",
    "triple_choice_violated",
    "validate_chain",
    "verify_lemma_123",
    "verify_lemma_abcd",
    "verify_theorem_exhaustive",
    "write_chain",
    "write_difference_graph",
    "write_family_report",
    "write_oracle_report",
    "write_record",
    "write_theorem_report",
    "write_witness",
]
