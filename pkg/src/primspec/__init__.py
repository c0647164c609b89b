"""Primitive ideal space of a graph algebra, computed as graph combinatorics.

A directed graph with edge multiplicities in {1, ..., 2**63 - 1, inf}
presents an algebra whose ideal structure is fully combinatorial: gauge
invariant ideals come from admissible pairs (K, B), the points of the
primitive ideal space come from maximal tails and breaking vertices, and
the hull-kernel topology is a closure operator on those points.  This
package computes all of it exactly, with rational circle coordinates.
"""

from .circle import Arc, CirclePoint, CircleSet, circle_closure
from .errors import (
    GraphParseError,
    InadmissiblePairError,
    InternalInconsistencyError,
    PrimspecError,
    ValidationError,
)
from .graph import MAX_MULTIPLICITY, OMEGA, Cardinality, Edge, Graph, Loop, parse_graph
from .ideals import (
    GaugeInvariantIdeal,
    enumerate_gi_ideals,
    gi_contains,
    gi_ideal,
    gi_meet,
    ideal_of_breaking_vertex,
    ideal_of_gamma_tail,
    mt_intersection_special,
    prim_elements,
    quotient_graph,
    sandwich,
    whole_ideal,
    zero_ideal,
)
from .subsets import (
    enumerate_hs,
    hereditary_closure,
    is_hereditary,
    is_saturated,
    k_fin_inf,
    k_inf_empty,
    omega,
    saturate,
    shc,
)
from .tails import (
    MaximalTail,
    TailData,
    a_count_is_finite,
    breaking_vertices,
    maximal_tails,
    no_exit_loop,
    tail_data,
)
from .topology import (
    EMPTY_SUBSET,
    PrimIdeal,
    PrimSpace,
    PrimSubset,
    closure,
    is_simple,
    oracle_closure_member,
    prim_subset,
    specialization_order,
    tau_order,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "Cardinality",
    "CirclePoint",
    "CircleSet",
    "EMPTY_SUBSET",
    "Edge",
    "GaugeInvariantIdeal",
    "Graph",
    "GraphParseError",
    "InadmissiblePairError",
    "InternalInconsistencyError",
    "Loop",
    "MAX_MULTIPLICITY",
    "MaximalTail",
    "OMEGA",
    "PrimIdeal",
    "PrimSpace",
    "PrimSubset",
    "PrimspecError",
    "TailData",
    "ValidationError",
    "a_count_is_finite",
    "breaking_vertices",
    "circle_closure",
    "closure",
    "enumerate_gi_ideals",
    "enumerate_hs",
    "gi_contains",
    "gi_ideal",
    "gi_meet",
    "hereditary_closure",
    "ideal_of_breaking_vertex",
    "ideal_of_gamma_tail",
    "is_hereditary",
    "is_saturated",
    "is_simple",
    "k_fin_inf",
    "k_inf_empty",
    "maximal_tails",
    "mt_intersection_special",
    "no_exit_loop",
    "omega",
    "oracle_closure_member",
    "parse_graph",
    "prim_elements",
    "prim_subset",
    "quotient_graph",
    "sandwich",
    "saturate",
    "shc",
    "specialization_order",
    "tail_data",
    "tau_order",
    "whole_ideal",
    "zero_ideal",
]
