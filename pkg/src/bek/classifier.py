"""Which binomial edge ideals have linear or pure resolutions, decided from the graph.

Without isolated vertices the ideal is pure exactly for complete graphs,
complete bipartite graphs and disjoint unions of paths. :func:`classify_pure`
recognises those shapes directly. :func:`obstruction_scan` is a separate
explainer that looks for a concrete reason a graph is not pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .betti import BettiTable, betti_complete, betti_path, purity_compatible
from .graph import (
    Graph,
    GraphError,
    clique_census,
    component_graphs,
    connected_components,
    induced_subgraph,
    iter_cliques,
)


class IsolatedVertexError(GraphError):
    pass


class Verdict(enum.Enum):
    COMPLETE = "Complete"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    DISJOINT_PATHS = "DisjointPaths"
    NOT_PURE = "NotPure"


@dataclass(frozen=True)
class PureClass:
    verdict: Verdict
    hint: str | None = None

    def __post_init__(self) -> None:
        if self.verdict is not Verdict.NOT_PURE and self.hint is not None:
            raise ValueError("only a NotPure verdict carries a hint")

    @property
    def pure(self) -> bool:
        return self.verdict is not Verdict.NOT_PURE

    def __str__(self) -> str:
        return self.verdict.value if self.hint is None else f"{self.verdict.value} ({self.hint})"


def _reject_isolated(g: Graph) -> None:
    iso = [v for v in g.vertices if not g.adj[v]]
    if iso:
        raise IsolatedVertexError(f"isolated vertices {iso}: the classification assumes none")


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    side: dict[int, int] = {}
    for comp in connected_components(g):
        root = min(comp)
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return {v for v, s in side.items() if s == 0}, {v for v, s in side.items() if s == 1}


def is_complete_bipartite(g: Graph) -> bool:
    if len(connected_components(g)) != 1 or g.n < 2:
        return False
    parts = bipartition(g)
    if parts is None:
        return False
    a, b = parts
    return len(g.edges) == len(a) * len(b)


def is_path(g: Graph) -> bool:
    """Connected, acyclic and of maximum degree at most two."""
    if len(connected_components(g)) != 1:
        return False
    return len(g.edges) == g.n - 1 and all(g.degree(v) <= 2 for v in g.vertices)


def has_linear_resolution(g: Graph) -> bool:
    _reject_isolated(g)
    return is_complete(g)


CYCLE_HINT = "induced C_m, m>=5"
TRIANGLE_HINT = "triangle in a non-complete component"
SQUARE_PENDANT_HINT = "induced C_4 plus pendant vertex"
CHAIR_HINT = "induced tree containing P_4 and K_{1,3}"
COMPONENTS_HINT = "incompatible components"


def classify_pure(g: Graph) -> PureClass:
    _reject_isolated(g)
    if is_complete(g) and len(connected_components(g)) == 1:
        return PureClass(Verdict.COMPLETE)
    if is_complete_bipartite(g):
        return PureClass(Verdict.COMPLETE_BIPARTITE)
    if all(is_path(c) for c in component_graphs(g)):
        return PureClass(Verdict.DISJOINT_PATHS)
    found = obstruction_scan(g)
    return PureClass(Verdict.NOT_PURE, found.hint if found else None)


# -- obstructions ------------------------------------------------------------

@dataclass(frozen=True)
class Obstruction:
    hint: str
    vertices: tuple[int, ...]
    detail: str = ""


def find_induced_long_cycle(g: Graph, min_len: int = 5) -> tuple[int, ...] | None:
    """A chordless cycle of length at least ``min_len``, as a vertex sequence."""

    def walk(path: list[int]) -> tuple[int, ...] | None:
        s, u = path[0], path[-1]
        for w in sorted(g.adj[u]):
            if w <= s or w in path:
                continue
            if any(g.has_edge(w, p) for p in path[1:-1]):
                continue
            if len(path) >= 2 and g.has_edge(w, s):
                if len(path) + 1 >= min_len:
                    return tuple(path + [w])
                continue
            path.append(w)
            got = walk(path)
            if got:
                return got
            path.pop()
        return None

    # each cycle is found from its smallest vertex
    for s in g.vertices:
        got = walk([s])
        if got:
            return got
    return None


def _is_square_plus_pendant(h: Graph) -> bool:
    degs = sorted(h.degree(v) for v in h.vertices)
    if h.n != 5 or len(h.edges) != 5 or degs != [1, 2, 2, 2, 3]:
        return False
    leaf = next(v for v in h.vertices if h.degree(v) == 1)
    rest = induced_subgraph(h, [v for v in h.vertices if v != leaf])
    return all(rest.degree(v) == 2 for v in rest.vertices) and len(connected_components(rest)) == 1


def _is_chair(h: Graph) -> bool:
    """The 5-vertex tree with degrees 3,2,1,1,1 (a claw with one edge subdivided)."""
    degs = sorted(h.degree(v) for v in h.vertices)
    return h.n == 5 and len(h.edges) == 4 and degs == [1, 1, 1, 2, 3] and len(connected_components(h)) == 1


def _find_five(g: Graph, test) -> tuple[int, ...] | None:
    for w in combinations(g.vertices, 5):
        if test(induced_subgraph(g, w)):
            return w
    return None


def _pure_table(c: Graph) -> BettiTable | None:
    """Exact table of a component whose shape has a closed form, else None."""
    if is_complete(c):
        return betti_complete(c.n)
    if is_path(c):
        return betti_path(c.n)
    return None


def _scan_connected(g: Graph, offset: dict[int, int]) -> Obstruction | None:
    back = lambda vs: tuple(offset[v] for v in vs)  # noqa: E731
    cyc = find_induced_long_cycle(g)
    if cyc:
        return Obstruction(CYCLE_HINT, back(cyc), f"induced C_{len(cyc)}")
    if clique_census(g)[3] and not is_complete(g):
        tri = next(c for c in iter_cliques(g) if len(c) == 3)
        return Obstruction(TRIANGLE_HINT, back(sorted(tri)))
    w = _find_five(g, _is_square_plus_pendant)
    if w:
        return Obstruction(SQUARE_PENDANT_HINT, back(w))
    w = _find_five(g, _is_chair)
    if w:
        return Obstruction(CHAIR_HINT, back(w))
    return None


def obstruction_scan(g: Graph) -> Obstruction | None:
    """A concrete witness that ``g`` is not pure, or None if no catalogued pattern is found.

    Connected pieces are searched for an induced long cycle, a triangle in a
    non-complete component, an induced C_4 with a pendant vertex, and an
    induced chair. If every component is pure on its own, pairs of
    components are tested for compatibility of their shifts.
    """
    comps = connected_components(g)
    pieces = []
    for comp in comps:
        verts = sorted(comp)
        sub = induced_subgraph(g, verts)
        found = _scan_connected(sub, dict(enumerate(verts, start=1)))
        if found:
            return found
        pieces.append((tuple(verts), sub))
    for (va, a), (vb, b) in combinations(pieces, 2):
        if a.n < 2 or b.n < 2:
            continue
        ta, tb = _pure_table(a), _pure_table(b)
        if ta is not None and tb is not None:
            if not purity_compatible(ta, tb):
                return Obstruction(COMPONENTS_HINT, va + vb, "shift degrees d_i = i*d_1 fail")
        elif ta is None or tb is None:
            # a complete bipartite component that is not a path has a nonlinear
            # shift that no other nonempty component matches
            return Obstruction(COMPONENTS_HINT, va + vb, "complete bipartite component beside another")
    return None
