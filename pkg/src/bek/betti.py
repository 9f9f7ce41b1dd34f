"""Graded Betti tables and the closed-form tables for binomial edge ideals.

Every table is stored in quotient indexing: the table of ``S/I`` with the
entry ``(0, 0) = 1``. :func:`ideal_entries` shifts to the indexing of ``I``
when a caller needs it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from .graph import (
    Graph,
    GraphError,
    clique_census,
    component_graphs,
    connected_components,
    free_cut_edges,
    induced_subgraph,
    reduced_graph,
)


def binom(a: int, b: int) -> int:
    """``C(a, b)``, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


class BettiTable:
    """Sparse table ``(i, j) -> beta_{i,j}(S/I)``; zero entries are not stored."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), b in (entries or {}).items():
            if not isinstance(b, int) or b < 0:
                raise ValueError(f"Betti number at {(i, j)} must be a nonnegative int, got {b!r}")
            if i < 0 or j < 0:
                raise ValueError(f"negative index {(i, j)}")
            if b:
                clean[(int(i), int(j))] = b
        if clean.get((0, 0), 0) != 1:
            raise ValueError("a quotient table needs beta_{0,0} = 1")
        if any(i == 0 and j != 0 for i, j in clean):
            raise ValueError("a cyclic quotient has nothing else in homological degree 0")
        self._entries = clean

    @classmethod
    def unit(cls) -> BettiTable:
        """The table of ``S`` itself (zero ideal)."""
        return cls({(0, 0): 1})

    @classmethod
    def from_ideal(cls, entries: Mapping[tuple[int, int], int]) -> BettiTable:
        shifted = {(i + 1, j): b for (i, j), b in entries.items()}
        shifted[(0, 0)] = 1
        return cls(shifted)

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return dict(self._entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BettiTable) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._entries.items()))
        return f"BettiTable({{{body}}})"

    def items(self):
        return sorted(self._entries.items())

    @property
    def pd(self) -> int:
        return max(i for i, _ in self._entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self._entries)

    def degrees(self, i: int) -> list[int]:
        return sorted(j for ii, j in self._entries if ii == i)

    def totals(self) -> list[int]:
        out = [0] * (self.pd + 1)
        for (i, _), b in self._entries.items():
            out[i] += b
        return out

    def ideal_entries(self) -> dict[tuple[int, int], int]:
        """Entries of the ideal: drop ``(0, 0)`` and lower the homological index by one."""
        return {(i - 1, j): b for (i, j), b in self._entries.items() if i > 0}

    def linear_strand(self) -> dict[int, int]:
        """``i -> beta_{i,i+2}`` of the ideal, nonzero entries only."""
        return {i: b for (i, j), b in self.ideal_entries().items() if j == i + 2}

    def polynomial(self) -> dict[tuple[int, int], int]:
        """Coefficients of the Betti polynomial ``sum beta_{i,j} p^i q^j``."""
        return self.entries

    def to_json(self) -> str:
        rows = [[i, j, b] for (i, j), b in self.items()]
        return json.dumps({"entries": rows, "pd": self.pd, "reg": self.reg})

    @classmethod
    def from_json(cls, text: str) -> BettiTable:
        data = json.loads(text)
        return cls({(i, j): b for i, j, b in data["entries"]})

    def diagram(self) -> str:
        """Macaulay2-style diagram: column ``i``, row ``j - i``, zeros shown as ``.``."""
        cols = range(self.pd + 1)
        rows = range(self.reg + 1)
        totals = self.totals()
        cells = [[str(self[i, i + r]) if self[i, i + r] else "." for i in cols] for r in rows]
        width = [max(len(str(i)), len(str(totals[i])), *(len(row[i]) for row in cells)) for i in cols]
        label_w = max(6, len(f"{self.reg}:"))

        def line(label: str, items) -> str:
            return " ".join([label.rjust(label_w)] + [s.rjust(w) for s, w in zip(items, width)])

        out = [line("", [str(i) for i in cols]), line("total:", [str(t) for t in totals])]
        out += [line(f"{r}:", cells[r]) for r in rows]
        return "\n".join(out)


# -- closed forms ----------------------------------------------------------

def ideal_table_from_quotient(t: BettiTable) -> dict[tuple[int, int], int]:
    return t.ideal_entries()


def betti_complete(m: int) -> BettiTable:
    """Eagon-Northcott: ``beta_{i,i+1} = i * C(m, i+1)`` for ``1 <= i <= m-1``."""
    if m < 1:
        raise ValueError("m must be positive")
    entries = {(0, 0): 1}
    entries.update({(i, i + 1): i * binom(m, i + 1) for i in range(1, m)})
    return BettiTable(entries)


def betti_path(n: int) -> BettiTable:
    """Koszul complex on the ``n - 1`` edge binomials: ``beta_{i,2i} = C(n-1, i)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return BettiTable({(i, 2 * i): binom(n - 1, i) for i in range(n)})


def tensor_product(a: BettiTable, b: BettiTable) -> BettiTable:
    """Convolution: the table of a sum of ideals in disjoint sets of variables."""
    out: dict[tuple[int, int], int] = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            key = (i + k, j + l)
            out[key] = out.get(key, 0) + x * y
    return BettiTable(out)


def attach_free_cut_edge(t: BettiTable) -> BettiTable:
    """Multiply the Betti polynomial by ``1 + p q^2``."""
    out = t.entries
    for (i, j), b in t.items():
        out[(i + 1, j + 2)] = out.get((i + 1, j + 2), 0) + b
    return BettiTable(out)


def _lollipop_params(m: int, handles: Iterable[int]) -> int:
    handles = list(handles)
    if m < 2:
        raise ValueError("lollipop needs m >= 2")
    if not 1 <= len(handles) <= m:
        raise ValueError(f"need 1 <= k <= m handles, got {len(handles)}")
    if any(t < 1 for t in handles):
        raise ValueError("handle lengths must be positive")
    return sum(handles)


def betti_lollipop(m: int, handles: Iterable[int]) -> BettiTable:
    """Table of ``S/J`` for the k-handle lollipop; it depends only on ``m`` and ``t = sum(handles)``."""
    t = _lollipop_params(m, handles)
    entries = {(0, 0): 1}
    for i in range(1, m + t):
        for j in range(1, i):
            entries[(i, i + j)] = (i - j + 1) * binom(m, i - j + 2) * binom(t, j - 1)
        entries[(i, 2 * i)] = binom(t, i - 1) * binom(m, 2) + binom(t, i)
    return BettiTable(entries)


@dataclass(frozen=True)
class CutEdgeBound:
    table: BettiTable
    pd: int
    reg: int


def cut_edge_upper_bound(without_e: BettiTable, completed: BettiTable) -> CutEdgeBound:
    """Upper bounds for a graph with a cut edge ``e``.

    ``without_e`` is the table of ``G \\ e`` and ``completed`` that of
    ``(G \\ e)_e``. In quotient indexing the entrywise bound is
    ``without_e + p q^2 * completed``. The pd and reg bounds are the maxima
    from the corresponding inequalities.
    """
    out = without_e.entries
    for (i, j), b in completed.items():
        out[(i + 1, j + 2)] = out.get((i + 1, j + 2), 0) + b
    return CutEdgeBound(
        table=BettiTable(out),
        pd=max(without_e.pd, completed.pd + 1),
        reg=max(without_e.reg, completed.reg + 1),
    )


def pd(t: BettiTable) -> int:
    return t.pd


def reg(t: BettiTable) -> int:
    return t.reg


# -- purity ----------------------------------------------------------------

@dataclass(frozen=True)
class Purity:
    pure: bool
    witness: tuple[int, tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.pure


def purity_check(t: BettiTable | Mapping[tuple[int, int], int]) -> Purity:
    """Pure iff every homological degree ``i >= 1`` carries at most one internal degree.

    Accepts a quotient table or a raw ideal-indexed mapping. The witness
    reports the homological degree in the indexing of the input.
    """
    entries = t.entries if isinstance(t, BettiTable) else {k: v for k, v in t.items() if v}
    first = 1 if isinstance(t, BettiTable) else 0
    by_i: dict[int, list[int]] = {}
    for (i, j) in entries:
        if i >= first:
            by_i.setdefault(i, []).append(j)
    for i in sorted(by_i):
        if len(by_i[i]) > 1:
            return Purity(False, (i, tuple(sorted(by_i[i]))))
    return Purity(True)


def shifts(t: BettiTable) -> dict[int, int]:
    """``i -> d_i`` for a pure table; raises on an impure one."""
    if not purity_check(t):
        raise ValueError("table is not pure")
    return {i: j for (i, j) in t.entries if i >= 1}


def purity_compatible(a: BettiTable, b: BettiTable) -> bool:
    """Whether the tensor product of two pure tables is pure.

    Both must be pure with equal first shift ``d_1 = e_1`` and shifts growing
    as ``d_i = i * d_1`` and ``e_j = j * e_1``. A table of ``S`` is compatible
    with any pure table.
    """
    if not (purity_check(a) and purity_check(b)):
        return False
    da, db = shifts(a), shifts(b)
    if not da or not db:
        return True
    if da[1] != db[1]:
        return False
    return all(d == i * da[1] for i, d in da.items()) and all(e == j * db[1] for j, e in db.items())


# -- strand prediction -----------------------------------------------------

class StrandStatus(enum.Enum):
    THEOREM_BACKED = "TheoremBacked"
    CONJECTURAL = "Conjectural"


@dataclass(frozen=True)
class StrandPrediction:
    """``values[i]`` is the predicted ``beta_{i,i+2}(J_G)``."""

    values: dict[int, int]
    status: StrandStatus


def _is_complete_graph(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def _triangle_free(g: Graph) -> bool:
    return clique_census(g)[3] == 0


def strand_prediction(g: Graph) -> StrandPrediction:
    census = clique_census(g)
    values = {0: census[2]}
    for i in range(1, max(census.clique_number - 1, 2)):
        values[i] = (i + 1) * census[i + 2]
    backed = all(
        _triangle_free(c) or _is_complete_graph(c) for c in component_graphs(reduced_graph(g))
    )
    return StrandPrediction(values, StrandStatus.THEOREM_BACKED if backed else StrandStatus.CONJECTURAL)


# -- closed-form dispatch for the CLI --------------------------------------

class NoClosedFormError(GraphError):
    pass


def formula_table(g: Graph) -> BettiTable:
    """Exact table from the closed forms, peeling free cut edges and splitting components.

    Covers complete graphs, paths and their disjoint unions, k-handle
    lollipops, and anything that reduces to cliques by deleting free cut
    edges one at a time.
    """
    comps = connected_components(g)
    if len(comps) > 1:
        out = BettiTable.unit()
        for c in comps:
            out = tensor_product(out, formula_table(induced_subgraph(g, c)))
        return out
    if g.n <= 1:
        return BettiTable.unit()
    if _is_complete_graph(g):
        return betti_complete(g.n)
    fce = sorted(free_cut_edges(g))
    if not fce:
        raise NoClosedFormError("no closed-form available for this graph")
    return attach_free_cut_edge(formula_table(g.without_edges(fce[:1])))
