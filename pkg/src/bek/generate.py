"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs on ``n`` vertices are grown from those on ``n - 1`` by adding a
vertex with every possible neighbourhood; duplicates are rejected by a
canonical form. The canonical form refines vertices by iterated degree
colouring, then maximises the adjacency bitstring over permutations that
respect the colour classes.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from .graph import Graph, is_connected


def _refine(g: Graph) -> list[list[int]]:
    """Ordered colour classes from colour refinement, started at the degrees."""
    colour = {v: g.degree(v) for v in g.vertices}
    while True:
        sig = {v: (colour[v], tuple(sorted(colour[w] for w in g.adj[v]))) for v in g.vertices}
        keys = sorted(set(sig.values()))
        new = {v: keys.index(sig[v]) for v in g.vertices}
        if len(keys) == len(set(colour.values())):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in g.vertices:
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """An isomorphism invariant that separates non-isomorphic graphs: ``(n, code)``."""
    cells = _refine(g)
    pairs = list(combinations(range(g.n), 2))
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]
        code = 0
        for a, b in pairs:
            code = code << 1 | g.has_edge(order[a], order[b])
        if best is None or code > best:
            best = code
    return (g.n, best or 0)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and len(a.edges) == len(b.edges) and canonical_form(a) == canonical_form(b)


def graphs_on(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on exactly ``n`` vertices."""
    return list(_graphs_on(n))


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    reps: dict[tuple[int, int], Graph] = {}
    for base in _graphs_on(n - 1):
        for k in range(n):
            for nbrs in combinations(range(1, n), k):
                g = Graph(n, base.edges | {(u, n) for u in nbrs})
                key = canonical_form(g)
                if key not in reps:
                    reps[key] = g
    return tuple(reps[k] for k in sorted(reps))


def all_graphs(max_n: int, *, min_n: int = 1, connected: bool = False) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        for g in graphs_on(n):
            if not connected or is_connected(g):
                yield g


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < p))
