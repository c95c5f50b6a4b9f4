"""Independence complexes of small graphs: homotopy-type reduction,
exact integral homology, and exhaustive desk-scale conjecture sweeps."""

__version__ = "0.1.0"

from .complexes import (FaceMatching, SimplicialComplex, collapse_matchings,
                        graph_betti_vector, independence_complex,
                        lemma_path_matchings, matching_is_valid,
                        reduced_euler_characteristic_by_counts)
from .formats import (FormatError, graph_from_adjacency_text,
                      graph_from_graph6, graph_to_adjacency_text,
                      graph_to_graph6)
from .graphs import (Graph, PathWitness, ReductionTarget, complete_bipartite,
                     complete_graph, cycle_graph, find_reduction_target,
                     path_graph)
from .homology import (BettiVector, HomologyClass, is_sphere_like,
                       reduced_betti_from_masks, snf_diagonal)
from .reduction import (CONTRACTIBLE, UNKNOWN, HomotopyType, SeparationSide,
                        TraceStep, join_type, reduce_graph, replay_trace,
                        separate_combine, sphere, suspension_type)

__all__ = [
    "BettiVector", "CONTRACTIBLE", "FaceMatching", "FormatError", "Graph",
    "HomologyClass", "HomotopyType", "PathWitness", "ReductionTarget",
    "SeparationSide", "SimplicialComplex", "TraceStep", "UNKNOWN",
    "collapse_matchings", "complete_bipartite", "complete_graph",
    "cycle_graph", "find_reduction_target", "graph_betti_vector",
    "graph_from_adjacency_text", "graph_from_graph6",
    "graph_to_adjacency_text", "graph_to_graph6", "independence_complex",
    "is_sphere_like", "join_type", "lemma_path_matchings",
    "matching_is_valid", "path_graph", "reduce_graph",
    "reduced_betti_from_masks", "reduced_euler_characteristic_by_counts",
    "replay_trace", "separate_combine", "snf_diagonal", "sphere",
    "suspension_type",
]
