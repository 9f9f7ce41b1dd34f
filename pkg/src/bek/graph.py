"""Finite simple graphs on vertices 1..n and the structure a binomial edge ideal reads off them.

A :class:`Graph` is the only representation of a binomial edge ideal in this
package; nothing here ever builds polynomials.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]

UNREACHABLE = -1


class GraphError(ValueError):
    """Raised for malformed graphs and invalid graph operations."""


def _edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex set ``1..n``.

    Edges are stored as sorted pairs, so two graphs compare equal whenever
    they have the same vertex count and the same edge set.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        canon = set()
        for e in self.edges:
            u, v = e
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphError(f"edge {e} has an endpoint outside 1..{self.n}")
            canon.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks; bit ``v`` of ``masks[u]`` is set iff ``uv`` is an edge."""
        out = [0] * (self.n + 1)
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def without_edges(self, edges: Iterable[Iterable[int]]) -> Graph:
        drop = {_edge(*e) for e in edges}
        return Graph(self.n, self.edges - drop)

    def with_edges(self, edges: Iterable[Iterable[int]]) -> Graph:
        return Graph(self.n, self.edges | {_edge(*e) for e in edges})

    def relabel(self, order: Iterable[int]) -> Graph:
        """Relabel so that the vertex at position ``k`` of ``order`` becomes ``k`` (1-based)."""
        order = list(order)
        if sorted(order) != list(self.vertices):
            raise GraphError("relabeling must be a permutation of the vertices")
        new = {v: k for k, v in enumerate(order, start=1)}
        return Graph(self.n, frozenset(_edge(new[u], new[v]) for u, v in self.edges))

    def __str__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}; {body})"


# -- constructors ----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return make_path(n).with_edges([(n, 1)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("a complete graph needs at least one vertex")
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both parts of a complete bipartite graph must be nonempty")
    return Graph(a + b, frozenset((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)))


def make_k_handle_lollipop(m: int, handles: Iterable[int]) -> Graph:
    """K_m on 1..m with a pendant path of ``t_i`` new vertices hung off clique vertex ``i``."""
    handles = list(handles)
    if m < 2:
        raise GraphError("the clique of a lollipop needs m >= 2")
    if not 1 <= len(handles) <= m:
        raise GraphError(f"need 1 <= k <= m handles, got k={len(handles)} for m={m}")
    if any(t < 1 for t in handles):
        raise GraphError("every handle needs at least one vertex")
    edges = set(combinations(range(1, m + 1), 2))
    nxt = m + 1
    for anchor, t in enumerate(handles, start=1):
        prev = anchor
        for _ in range(t):
            edges.add((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt - 1, frozenset(edges))


def disjoint_union(*graphs: Graph) -> Graph:
    edges: set[Edge] = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


# -- plumbing --------------------------------------------------------------

def _check_vertices(g: Graph, vs: Iterable[int]) -> list[int]:
    vs = sorted(set(vs))
    bad = [v for v in vs if not 1 <= v <= g.n]
    if bad:
        raise GraphError(f"unknown vertices {bad}")
    return vs


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabeled to 1..|W| in increasing order."""
    keep = _check_vertices(g, vertices)
    pos = {v: k for k, v in enumerate(keep, start=1)}
    return Graph(len(keep), frozenset(
        (pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos))


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(e for e in combinations(g.vertices, 2) if e not in g.edges))


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def component_graphs(g: Graph) -> list[Graph]:
    return [induced_subgraph(g, c) for c in connected_components(g)]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distances(g: Graph) -> list[list[int]]:
    """All-pairs edge-count distances as an (n+1)x(n+1) table; row/column 0 unused.

    Pairs in different components hold :data:`UNREACHABLE`.
    """
    table = [[UNREACHABLE] * (g.n + 1) for _ in range(g.n + 1)]
    for s in g.vertices:
        for t, d in bfs_distances(g, s).items():
            table[s][t] = d
    return table


# -- cliques ---------------------------------------------------------------

def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """Inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    nb = g.masks
    out: list[frozenset[int]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(_bits(r)))
            return
        pivot = max(_bits(p | x), key=lambda u: (nb[u] & p).bit_count())
        for v in _bits(p & ~nb[pivot]):
            bit = 1 << v
            expand(r | bit, p & nb[v], x & nb[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, sum(1 << v for v in g.vertices), 0)
    return sorted(out, key=lambda c: (sorted(c), len(c)))


def iter_cliques(g: Graph) -> Iterator[frozenset[int]]:
    """Every nonempty complete subgraph, each vertex set exactly once."""
    nb = g.masks

    def grow(clique: list[int], cand: int) -> Iterator[frozenset[int]]:
        yield frozenset(clique)
        for v in _bits(cand):
            # only extend upward so each clique is produced from its sorted order
            yield from grow(clique + [v], cand & nb[v] & ~((1 << (v + 1)) - 1))

    for v in g.vertices:
        yield from grow([v], nb[v] & ~((1 << (v + 1)) - 1))


@dataclass(frozen=True)
class CliqueCensus:
    """``counts[i]`` is k_i(G), the number of complete subgraphs on ``i`` vertices."""

    counts: dict[int, int]

    def __getitem__(self, i: int) -> int:
        return self.counts.get(i, 0)

    @property
    def clique_number(self) -> int:
        return max((i for i, c in self.counts.items() if c), default=0)

    def as_list(self, upto: int | None = None) -> list[int]:
        top = self.clique_number if upto is None else upto
        return [self[i] for i in range(1, top + 1)]


def clique_census(g: Graph) -> CliqueCensus:
    counts: dict[int, int] = {}
    for c in iter_cliques(g):
        counts[len(c)] = counts.get(len(c), 0) + 1
    return CliqueCensus(counts)


# -- cut edges, free vertices, reduced graph -------------------------------

def _as_edge(g: Graph, e: Iterable[int]) -> Edge:
    u, v = e
    e = _edge(u, v)
    if e not in g.edges:
        raise GraphError(f"{e} is not an edge")
    return e


def is_cut_edge(g: Graph, e: Iterable[int]) -> bool:
    u, v = _as_edge(g, e)
    return v not in bfs_distances(g.without_edges([(u, v)]), u)


def cut_edges(g: Graph) -> set[Edge]:
    return {e for e in g.edges if is_cut_edge(g, e)}


def free_vertices(g: Graph) -> set[int]:
    """Vertices lying in exactly one maximal clique; isolated vertices count."""
    seen: dict[int, int] = {}
    for c in maximal_cliques(g):
        for v in c:
            seen[v] = seen.get(v, 0) + 1
    return {v for v, k in seen.items() if k == 1}


def is_free_cut_edge(g: Graph, e: Iterable[int]) -> bool:
    u, v = _as_edge(g, e)
    if not is_cut_edge(g, (u, v)):
        return False
    free = free_vertices(g.without_edges([(u, v)]))
    return u in free and v in free


def free_cut_edges(g: Graph) -> set[Edge]:
    return {e for e in g.edges if is_free_cut_edge(g, e)}


def reduced_graph(g: Graph) -> Graph:
    """Delete every free cut edge of ``g`` at once (one pass, not a fixed point)."""
    return g.without_edges(free_cut_edges(g))


class SwitchError(GraphError):
    """A free cut edge switch was requested that the definition does not allow."""


def switch_free_cut_edge(g: Graph, remove: Iterable[int], add: Iterable[int]) -> Graph:
    """Replace the free cut edge ``remove`` with ``add``, which must be a free cut edge afterwards."""
    u, v = remove
    r = _edge(u, v)
    if r not in g.edges or not is_free_cut_edge(g, r):
        raise SwitchError(f"{r} is not a free cut edge")
    x, y = add
    a = _edge(x, y)
    if not (1 <= a[0] and a[1] <= g.n):
        raise SwitchError(f"{a} has an endpoint outside 1..{g.n}")
    base = g.without_edges([r])
    if a in base.edges:
        raise SwitchError(f"{a} is already an edge")
    out = base.with_edges([a])
    if not is_free_cut_edge(out, a):
        raise SwitchError(f"{a} is not a free cut edge of the switched graph")
    return out


def ge_completion(g: Graph, e: Iterable[int]) -> Graph:
    """Add every pair inside N(v) and inside N(w) for the non-edge ``e = {v, w}``."""
    v, w = e
    pair = _edge(v, w)
    _check_vertices(g, pair)
    if pair in g.edges:
        raise GraphError(f"{pair} is already an edge")
    extra = list(combinations(sorted(g.adj[v]), 2)) + list(combinations(sorted(g.adj[w]), 2))
    return g.with_edges(extra)
