"""Hochster's formula for edge ideals, used as the ground-truth oracle.

For a graph ``H`` the Stanley-Reisner complex of its edge ideal is the
independence complex of ``H``, and

    beta_{i,j}(I(H)) = sum over |W| = j of dim H~_{j-i-2}(Ind(H)_W; Q).

Reduced homology is computed from exact boundary-matrix ranks, one induced
subcomplex at a time. Nothing in this module reads the closed-form tables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .betti import BettiTable
from .closedness import NotClosedError, find_closed_labeling, in_graph
from .graph import Graph, GraphError, clique_census, complement
from .linalg import rank

DEFAULT_SUBSET_CAP = 16


class SubsetCapExceeded(GraphError):
    pass


def subset_cap() -> int:
    return int(os.environ.get("BEK_SUBSET_CAP", DEFAULT_SUBSET_CAP))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets; faces are all subsets of facets.

    The void complex has no facets. The complex ``{emptyset}`` has the single
    facet ``frozenset()``.
    """

    vertices: frozenset[int]
    facets: tuple[frozenset[int], ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], vertices: Iterable[int] | None = None):
        fs = {frozenset(f) for f in facets}
        maximal = [f for f in fs if not any(f < g for g in fs)]
        verts = frozenset().union(*maximal) if maximal else frozenset()
        if vertices is not None:
            verts = frozenset(vertices) | verts
        return cls(verts, tuple(sorted(maximal, key=lambda f: (len(f), sorted(f)))))

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)

    def faces(self, d: int) -> list[tuple[int, ...]]:
        """All faces of dimension ``d`` as sorted tuples, in lexicographic order."""
        out: set[tuple[int, ...]] = set()
        for f in self.facets:
            if len(f) >= d + 1:
                out.update(combinations(sorted(f), d + 1))
        return sorted(out)

    def f_vector(self) -> dict[int, int]:
        return {d: len(self.faces(d)) for d in range(-1, self.dim + 1)}

    def restrict(self, w: Iterable[int]) -> SimplicialComplex:
        w = frozenset(w)
        return SimplicialComplex.from_facets((f & w for f in self.facets), ())


def independent_sets(h: Graph, within: int | None = None, max_size: int | None = None) -> list[int]:
    """Independent vertex sets of ``h`` as bitmasks (bit ``v`` for vertex ``v``), empty set included.

    ``within`` restricts to subsets of a vertex bitmask and ``max_size``
    bounds the cardinality.
    """
    nb = h.masks
    pool = [v for v in h.vertices if within is None or within >> v & 1]
    limit = len(pool) if max_size is None else max_size
    out: list[int] = []

    def grow(mask: int, k: int, blocked: int, size: int) -> None:
        out.append(mask)
        if size == limit:
            return
        for idx in range(k, len(pool)):
            v = pool[idx]
            if not blocked >> v & 1:
                grow(mask | 1 << v, idx + 1, blocked | nb[v], size + 1)

    grow(0, 0, 0, 0)
    return out


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def independence_complex(h: Graph) -> SimplicialComplex:
    sets = independent_sets(h)
    nb = h.masks
    maximal = []
    for s in sets:
        # maximal iff no vertex outside s is free to add
        if all(s >> v & 1 or nb[v] & s for v in h.vertices):
            maximal.append(_mask_vertices(s))
    return SimplicialComplex.from_facets(maximal, h.vertices)


@dataclass
class HomologyRanks:
    """``ranks[d]`` is the rank of reduced homology in dimension ``d``; missing means zero."""

    ranks: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def nonzero(self) -> dict[int, int]:
        return {d: r for d, r in sorted(self.ranks.items()) if r}


def _boundary_rows(faces: list[tuple[int, ...]], lower_index: dict[tuple[int, ...], int]):
    for f in faces:
        row = {}
        for k in range(len(f)):
            row[lower_index[f[:k] + f[k + 1:]]] = -1 if k & 1 else 1
        yield row


def homology_from_faces(faces_by_dim: dict[int, list[tuple[int, ...]]], top: int | None = None,
                        prime: int | None = None) -> HomologyRanks:
    """Reduced homology ranks from the face lists, dimensions ``-1 .. top``.

    ``faces_by_dim[-1]`` must be ``[()]`` for a nonvoid complex. Faces of
    dimension ``top + 1`` are needed to get dimension ``top`` right.
    """
    dims = sorted(d for d, fs in faces_by_dim.items() if fs)
    if not dims:
        return HomologyRanks()
    hi = dims[-1] if top is None else min(top, dims[-1])
    ranks_of_boundary: dict[int, int] = {}

    def boundary_rank(d: int) -> int:
        # rank of the boundary from dimension d to d-1
        if d not in ranks_of_boundary:
            upper = faces_by_dim.get(d, [])
            lower = faces_by_dim.get(d - 1, [])
            if not upper or not lower:
                ranks_of_boundary[d] = 0
            else:
                idx = {f: k for k, f in enumerate(lower)}
                ranks_of_boundary[d] = rank(_boundary_rows(upper, idx), prime)
        return ranks_of_boundary[d]

    out = {}
    for d in range(-1, hi + 1):
        c = len(faces_by_dim.get(d, []))
        r = c - boundary_rank(d) - boundary_rank(d + 1)
        if r:
            out[d] = r
    return HomologyRanks(out)


def reduced_homology_ranks(c: SimplicialComplex, prime: int | None = None) -> HomologyRanks:
    if not c.facets:
        return HomologyRanks()
    faces = {d: c.faces(d) for d in range(-1, c.dim + 1)}
    return homology_from_faces(faces, prime=prime)


def _faces_of_subset(h: Graph, w: int, max_dim: int | None) -> dict[int, list[tuple[int, ...]]]:
    faces: dict[int, list[tuple[int, ...]]] = {}
    size = None if max_dim is None else max_dim + 1
    for s in independent_sets(h, within=w, max_size=size):
        f = _mask_vertices(s)
        faces.setdefault(len(f) - 1, []).append(f)
    for fs in faces.values():
        fs.sort()
    return faces


def hochster_betti(h: Graph, *, linear_strand_only: bool = False, prime: int | None = None,
                   cap: int | None = None) -> BettiTable:
    """Graded Betti table of ``S/I(H)`` by summing reduced homology of induced independence complexes.

    With ``linear_strand_only`` only ``H~_0`` is computed, which yields exactly
    the entries ``beta_{i,i+2}`` of the ideal.
    """
    cap = subset_cap() if cap is None else cap
    if h.n > cap:
        raise SubsetCapExceeded(f"{h.n} vertices exceeds the subset cap {cap} (BEK_SUBSET_CAP)")
    nb = h.masks
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    full = sum(1 << v for v in h.vertices)
    w = full
    # every nonempty subset, walked as bitmasks in decreasing order
    while w:
        # a vertex of W with no neighbour in W is a cone point: Ind(H)_W is contractible
        cone = any(not nb[v] & w for v in _mask_vertices(w))
        if not cone:
            j = w.bit_count()
            faces = _faces_of_subset(h, w, 1 if linear_strand_only else None)
            top = 0 if linear_strand_only else None
            for d, r in homology_from_faces(faces, top=top, prime=prime).ranks.items():
                i = j - d - 2
                if i >= 0:
                    entries[(i + 1, j)] = entries.get((i + 1, j), 0) + r
        w = (w - 1) & full
    return BettiTable(entries)


def _component_count(masks: tuple[int, ...], w: int) -> int:
    count = 0
    left = w
    while left:
        count += 1
        frontier = left & -left
        seen = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            fresh = masks[low.bit_length() - 1] & left & ~seen
            seen |= fresh
            frontier |= fresh
        left &= ~seen
    return count


def roth_van_tuyl(h: Graph, i: int) -> int:
    """``beta_{i,i+2}(I(H))`` as a sum over (i+2)-subsets of (#components of the complement on W) - 1."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    cm = complement(h).masks
    total = 0
    for w in combinations(h.vertices, i + 2):
        total += _component_count(cm, sum(1 << v for v in w)) - 1
    return total


def roth_van_tuyl_strand(h: Graph) -> dict[int, int]:
    return {i: roth_van_tuyl(h, i) for i in range(0, max(h.n - 1, 0))}


@dataclass(frozen=True)
class StrandRow:
    i: int
    roth_van_tuyl: int
    hochster: int
    clique_formula: int

    @property
    def agrees(self) -> bool:
        return self.roth_van_tuyl == self.hochster == self.clique_formula


@dataclass(frozen=True)
class StrandReport:
    graph: Graph
    labeling: tuple[int, ...]
    rows: tuple[StrandRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.agrees for r in self.rows)


def closed_strand_check(g: Graph, prime: int | None = None) -> StrandReport:
    """Compare three values of the linear strand of ``I(in_<(G))`` for every ``i >= 1``.

    The values are Roth-Van Tuyl on the initial graph, Hochster's formula on
    it, and ``(i+1) * k_{i+2}(G)``.
    """
    labeling = find_closed_labeling(g)
    if labeling is None:
        raise NotClosedError("closed_strand_check needs a closed graph")
    h = in_graph(g, labeling).as_graph()
    strand = hochster_betti(h, linear_strand_only=True, prime=prime).linear_strand()
    census = clique_census(g)
    rows = []
    # H has 2n vertices, so beta_{i,i+2} can only be nonzero for i <= 2n - 2
    for i in range(1, 2 * g.n - 1):
        rows.append(StrandRow(i, roth_van_tuyl(h, i), strand.get(i, 0), (i + 1) * census[i + 2]))
    return StrandReport(g, labeling.order, tuple(rows))
