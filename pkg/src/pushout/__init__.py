"""Constant-amortized-time enumeration of graph objects, with a recursion-tree
profiler for checking the push-out amortization condition on measured costs."""

from .connected import enum_all_connected, enum_connected_from_root
from .elim import (
    LeafStructure,
    NonCutStructure,
    NotChordalError,
    SimplicialStructure,
    StructureError,
    enum_elim_orderings,
    leaf_structure,
    noncut_structure,
    simplicial_structure,
)
from .graph import ContractViolation, GraphFormatError, MultiGraph, format_graph, parse_graph
from .matching import enum_matchings, enum_matchings_naive, incremental_gplus_walk
from .profiler import (
    POParams,
    POReport,
    RecursionTrace,
    Tracer,
    check_po,
    minimal_beta,
    record_enumeration,
    search_feasible_params,
    simulate_push_out,
)
from .solution_io import CollectingSink, CountingSink, DeltaSink, decode, encode
from .sptree import DisconnectedGraphError, enum_spanning_trees

__version__ = "0.1.0"
