"""Closed graphs: the Cox-Erskine criterion, labeling search, and the bipartite initial graph.

Two independent routes decide closedness. :func:`is_closed` tests chordal,
claw-free and narrow; :func:`find_closed_labeling` searches directly for a
labeling satisfying the quadratic Groebner basis condition. They are checked
against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    bfs_distances,
    component_graphs,
    connected_components,
    is_connected,
)

NARROW_PATH_CAP = 10**6


class NotClosedError(GraphError):
    pass


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """Maximum cardinality search, reversed; ``None`` if it is not a perfect elimination order."""
    weight = {v: 0 for v in g.vertices}
    visit: list[int] = []
    left = set(g.vertices)
    while left:
        # lowest label among the heaviest keeps the order deterministic
        v = min(left, key=lambda u: (-weight[u], u))
        left.remove(v)
        visit.append(v)
        for w in g.adj[v]:
            if w in left:
                weight[w] += 1
    peo = visit[::-1]
    pos = {v: k for k, v in enumerate(peo)}
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(w != parent and not g.has_edge(parent, w) for w in later):
            return None
    return peo


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced K_{1,3} as (center, leaf, leaf, leaf), or None."""
    for c in g.vertices:
        for a, b, d in combinations(sorted(g.adj[c]), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return (c, a, b, d)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def _shortest_paths(g: Graph, s: int, t: int, dist_t: dict[int, int], budget: list[int], cap: int):
    """Yield every shortest s-t path as a vertex list, walking the BFS layer DAG."""
    path = [s]

    def walk(u: int):
        if u == t:
            budget[0] -= 1
            if budget[0] < 0:
                raise GraphError(f"more than {cap} diametral shortest paths")
            yield list(path)
            return
        for w in sorted(g.adj[u]):
            if dist_t.get(w) == dist_t[u] - 1:
                path.append(w)
                yield from walk(w)
                path.pop()

    yield from walk(s)


def is_narrow(g: Graph, cap: int = NARROW_PATH_CAP) -> bool:
    """Every vertex is within distance one of every longest shortest path."""
    if not is_connected(g):
        raise GraphError("narrowness is only defined for connected graphs")
    if g.n <= 2:
        return True
    dist = {v: bfs_distances(g, v) for v in g.vertices}
    diam = max(max(d.values()) for d in dist.values())
    budget = [cap]
    for s, t in combinations(g.vertices, 2):
        if dist[s][t] != diam:
            continue
        for path in _shortest_paths(g, s, t, dist[t], budget, cap):
            near = set(path)
            for p in path:
                near |= g.adj[p]
            if len(near) < g.n:
                return False
    return True


def is_closed(g: Graph) -> bool:
    """Chordal, claw-free and narrow on every component."""
    if not is_chordal(g) or not is_claw_free(g):
        return False
    return all(is_narrow(c) for c in component_graphs(g))


@dataclass(frozen=True)
class ClosedLabeling:
    """``order[k-1]`` is the original vertex that receives label ``k``."""

    order: tuple[int, ...]

    def label_of(self) -> dict[int, int]:
        return {v: k for k, v in enumerate(self.order, start=1)}


def is_closed_labeling(g: Graph, order) -> bool:
    """Check the condition directly: neighbours of ``i`` on one side of ``i`` are pairwise adjacent."""
    if sorted(order) != list(g.vertices):
        return False
    h = g.relabel(order)
    for i in h.vertices:
        up = [j for j in h.adj[i] if j > i]
        down = [j for j in h.adj[i] if j < i]
        for side in (up, down):
            if any(not h.has_edge(a, b) for a, b in combinations(side, 2)):
                return False
    return True


def _label_component(g: Graph, comp: list[int]) -> list[int] | None:
    """DFS over partial orders of one component with incremental pruning."""
    placed: list[int] = []
    pos: dict[int, int] = {}

    def ok(v: int) -> bool:
        # neighbours already placed sit below v, so they must form a clique
        below = [w for w in g.adj[v] if w in pos]
        if any(not g.has_edge(a, b) for a, b in combinations(below, 2)):
            return False
        # for each placed neighbour i, v joins i's upward neighbourhood
        for i in below:
            for k in g.adj[i]:
                if k in pos and pos[k] > pos[i] and not g.has_edge(k, v):
                    return False
        return True

    def extend() -> bool:
        if len(placed) == len(comp):
            return True
        for v in comp:
            if v in pos or not ok(v):
                continue
            # a connected closed graph has a proper interval order, in which each
            # vertex after the first meets an earlier one
            if placed and not any(w in pos for w in g.adj[v]):
                continue
            pos[v] = len(placed)
            placed.append(v)
            if extend():
                return True
            placed.pop()
            del pos[v]
        return False

    return list(placed) if extend() else None


def find_closed_labeling(g: Graph) -> ClosedLabeling | None:
    """A closed labeling if one exists; components are labeled consecutively."""
    order: list[int] = []
    for comp in connected_components(g):
        part = _label_component(g, sorted(comp))
        if part is None:
            return None
        order.extend(part)
    return ClosedLabeling(tuple(order))


@dataclass(frozen=True)
class BipartiteInitialGraph:
    """Edge ``(i, j)``, ``i < j``, stands for the monomial ``x_i y_j`` of the initial ideal."""

    base_n: int
    edges: frozenset[tuple[int, int]]

    def x(self, i: int) -> int:
        return i

    def y(self, j: int) -> int:
        return self.base_n + j

    def as_graph(self) -> Graph:
        """Plain graph on 2n vertices: ``x_i`` is vertex ``i`` and ``y_j`` is vertex ``n + j``."""
        return Graph(2 * self.base_n, frozenset((self.x(i), self.y(j)) for i, j in self.edges))


def in_graph(g: Graph, labeling: ClosedLabeling | None = None) -> BipartiteInitialGraph:
    if labeling is None:
        labeling = find_closed_labeling(g)
        if labeling is None:
            raise NotClosedError("graph is not closed")
    elif not is_closed_labeling(g, labeling.order):
        raise NotClosedError("labeling is not closed for this graph")
    h = g.relabel(labeling.order)
    return BipartiteInitialGraph(g.n, frozenset(h.edges))
