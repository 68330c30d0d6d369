"""Paired approximation algorithms on graphs, digraphs and set systems.

Each paired routine returns two certified solutions from one linear-time
pass and a dispatch rule picks the one with the better guarantee. Exact
exponential-time oracles provide ground truth for small inputs.
"""

from .certificates import certificate, outcome_certificate, verify_certificate
from .color_path import degeneracy_color_and_path, depth_color_and_path, dispatch_color_path
from .degeneracy import degeneracy, greedy_color_with_peak
from .dfs import DfsForest, deepest_path, dfs_forest, dfs_forest_directed, preorder_tour
from .directed import asym_tour_and_acyclic, dispatch_asym_tsp, dispatch_directed, path_and_acyclic
from .gadgets import GadgetLayout, clique_is_instance, extract_tour, tsp_maxtsp_gadget
from .graph import Digraph, Graph, SetSystem, complement, disjoint_union, edge_union, transpose
from .hadwiger import GreedyBranchStrategy, clique_minor_in_dense, dispatch_hadwiger, paired_color_minor
from .io import ParseError, parse_any, parse_digraph, parse_graph, parse_setsystem, serialize
from .oracles import SizeLimitError
from .ramsey import BipartitePiece, RamseyGraph, build_ramsey, combine, piece_provider, verify_ramsey, witness_search
from .setcover import (
    AmplifiedSystem,
    CoverSolution,
    HitSolution,
    build_kG,
    build_kstarG,
    greedy_cover,
    pullback,
    reduce_solution,
)
from .solutions import (
    AcyclicSet,
    Coloring,
    IndependentSet,
    InvalidCertificate,
    MinorModel,
    PairedOutcome,
    Path,
    PathCover,
    SpanningForestCert,
    Tour,
    tour_length,
)
from .tsp_mis import dispatch_pathcover_mis, dispatch_tsp_mis, pathcover_and_mis, tour_and_mis

__version__ = "0.1.0"
