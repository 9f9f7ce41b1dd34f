from itertools import combinations

import pytest
from hypothesis import given, settings

from bek.betti import formula_table, NoClosedFormError, purity_check
from bek.classifier import (
    CHAIR_HINT,
    COMPONENTS_HINT,
    CYCLE_HINT,
    SQUARE_PENDANT_HINT,
    TRIANGLE_HINT,
    IsolatedVertexError,
    Verdict,
    bipartition,
    classify_pure,
    find_induced_long_cycle,
    has_linear_resolution,
    is_complete_bipartite,
    is_path,
    obstruction_scan,
)
from bek.generate import all_graphs
from bek.graph import (
    Graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
)

from conftest import graphs

CHAIR = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (3, 5)])
SQUARE_PENDANT = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])


def test_linear_examples():
    assert has_linear_resolution(make_complete(5))
    assert not has_linear_resolution(make_cycle(4))
    assert not has_linear_resolution(make_path(3))
    with pytest.raises(IsolatedVertexError):
        has_linear_resolution(disjoint_union(make_path(2), empty_graph(1)))


def test_isolated_vertices_rejected():
    with pytest.raises(IsolatedVertexError):
        classify_pure(Graph.from_edges(3, [(1, 2)]))
    with pytest.raises(IsolatedVertexError):
        classify_pure(empty_graph(1))


def test_pure_verdict_examples():
    assert classify_pure(make_complete_bipartite(2, 3)).verdict is Verdict.COMPLETE_BIPARTITE
    assert classify_pure(disjoint_union(make_path(3), make_path(5))).verdict is Verdict.DISJOINT_PATHS
    assert classify_pure(make_complete(2)).verdict is Verdict.COMPLETE
    # P_3 = K_{1,2}: CompleteBipartite outranks DisjointPaths
    assert classify_pure(make_path(3)).verdict is Verdict.COMPLETE_BIPARTITE
    assert classify_pure(make_path(4)).verdict is Verdict.DISJOINT_PATHS
    assert classify_pure(disjoint_union(make_complete(2), make_complete(2))).verdict is Verdict.DISJOINT_PATHS


@pytest.mark.parametrize("g, hint", [
    (make_cycle(5), CYCLE_HINT),
    (CHAIR, CHAIR_HINT),
    (disjoint_union(make_complete(3), make_path(2)), COMPONENTS_HINT),
    (disjoint_union(make_complete(4), make_complete(4)), COMPONENTS_HINT),
    (SQUARE_PENDANT, SQUARE_PENDANT_HINT),
    (Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)]), TRIANGLE_HINT),
])
def test_not_pure_hints(g, hint):
    pc = classify_pure(g)
    assert pc.verdict is Verdict.NOT_PURE and not pc.pure
    assert pc.hint == hint


def test_obstruction_witnesses_are_induced():
    c7 = obstruction_scan(make_cycle(7))
    assert c7.hint == CYCLE_HINT and sorted(c7.vertices) == list(range(1, 8))
    w = obstruction_scan(SQUARE_PENDANT)
    assert sorted(w.vertices) == [1, 2, 3, 4, 5]
    kk = obstruction_scan(disjoint_union(make_complete(4), make_complete(4)))
    assert kk.hint == COMPONENTS_HINT and "d_i = i*d_1" in kk.detail
    # a pendant on C_4 hidden inside a larger graph is reported on the original labels
    g = Graph.from_edges(7, [(2, 4), (4, 6), (6, 7), (2, 7), (7, 3), (3, 1)])
    found = obstruction_scan(g)
    h = induced_subgraph(g, found.vertices)
    assert sorted(h.degree(v) for v in h.vertices) == [1, 2, 2, 2, 3]


def test_long_cycle_search():
    for m in range(3, 10):
        got = find_induced_long_cycle(make_cycle(m))
        assert (got is not None) == (m >= 5)
    assert find_induced_long_cycle(make_complete(6)) is None
    c6_chord = make_cycle(6).with_edges([(1, 4)])
    assert find_induced_long_cycle(c6_chord) is None


@given(graphs(max_n=7))
@settings(max_examples=150, deadline=None)
def test_recognizers_agree_with_definitions(g):
    parts = bipartition(g)
    if parts is not None:
        a, b = parts
        assert all((u in a) != (v in a) for u, v in g.edges)
    if is_complete_bipartite(g):
        a, b = parts
        assert len(g.edges) == len(a) * len(b)
    if is_path(g):
        assert len(g.edges) == g.n - 1 and max((g.degree(v) for v in g.vertices), default=0) <= 2


def test_obstructions_absent_from_pure_classes():
    for g in all_graphs(7):
        if any(g.degree(v) == 0 for v in g.vertices):
            continue
        pc = classify_pure(g)
        if pc.pure:
            assert obstruction_scan(g) is None
        else:
            assert pc.hint is not None, g


def test_obstruction_free_graphs_are_classified_pure():
    # the catalogue is complete on small graphs: no pattern found means a pure class
    for g in all_graphs(7):
        if any(g.degree(v) == 0 for v in g.vertices):
            continue
        if obstruction_scan(g) is None:
            assert classify_pure(g).pure, g


def test_purity_of_formula_tables_matches_verdicts():
    checked = 0
    for g in all_graphs(7):
        if any(g.degree(v) == 0 for v in g.vertices):
            continue
        try:
            t = formula_table(g)
        except NoClosedFormError:
            continue
        checked += 1
        assert purity_check(t).pure == classify_pure(g).pure, g
    assert checked > 50
