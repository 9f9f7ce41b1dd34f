"""Betti numbers, purity and linear strands of binomial edge ideals, computed from graphs."""

from .betti import (
    BettiTable,
    attach_free_cut_edge,
    betti_complete,
    betti_lollipop,
    betti_path,
    formula_table,
    purity_check,
    strand_prediction,
    tensor_product,
)
from .classifier import PureClass, Verdict, classify_pure, has_linear_resolution, obstruction_scan
from .closedness import find_closed_labeling, in_graph, is_closed
from .graph import (
    Graph,
    clique_census,
    free_cut_edges,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_k_handle_lollipop,
    make_path,
    maximal_cliques,
    reduced_graph,
    switch_free_cut_edge,
)
from .homology import closed_strand_check, hochster_betti, roth_van_tuyl

__version__ = "0.1.0"
