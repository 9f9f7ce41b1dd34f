import random

import networkx as nx
import pytest
from hypothesis import given, settings

from bek.generate import all_graphs, canonical_form, graphs_on, is_isomorphic, random_graph
from bek.graph import Graph, is_connected, make_cycle, make_path

from conftest import graphs, to_nx

# isomorphism classes of graphs and of connected graphs on n vertices
ALL = [1, 2, 4, 11, 34, 156, 1044]
CONNECTED = [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    reps = graphs_on(n)
    assert len(reps) == ALL[n - 1]
    assert sum(is_connected(g) for g in reps) == CONNECTED[n - 1]


def test_matches_the_networkx_atlas():
    atlas = [h for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= 6]
    ours = list(all_graphs(6))
    assert len(ours) == len(atlas)
    for g in ours:
        matches = [h for h in atlas if h.number_of_nodes() == g.n and h.number_of_edges() == len(g.edges)
                   and nx.is_isomorphic(h, to_nx(g))]
        assert len(matches) == 1


@given(graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_canonical_form_is_invariant(g):
    rng = random.Random(len(g.edges))
    order = list(g.vertices)
    rng.shuffle(order)
    assert canonical_form(g.relabel(order)) == canonical_form(g)


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=150, deadline=None)
def test_is_isomorphic_matches_networkx(a, b):
    assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_isomorphism_examples():
    assert is_isomorphic(make_path(4), Graph.from_edges(4, [(2, 4), (4, 1), (1, 3)]))
    assert not is_isomorphic(make_cycle(6), Graph.from_edges(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]))


def test_random_graph_is_reproducible():
    a = random_graph(8, 0.4, random.Random(3))
    b = random_graph(8, 0.4, random.Random(3))
    assert a == b and a.n == 8
