"""Batch verification suites: formula side against the homology oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .betti import BettiTable, betti_lollipop, formula_table
from .closedness import in_graph, is_closed
from .generate import all_graphs
from .graph import Graph, make_k_handle_lollipop
from .homology import StrandReport, closed_strand_check, hochster_betti

MAX_STRAND_N = 7


def compositions(t: int, max_parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``t`` into positive parts, at most ``max_parts`` of them."""
    if t == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, t + 1):
        for rest in compositions(t - first, None if max_parts is None else max_parts - 1):
            yield (first,) + rest


@dataclass
class StrandSuiteResult:
    checked: int = 0
    failures: list[StrandReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_closed_strand(max_n: int, *, connected_only: bool = False, progress=None) -> StrandSuiteResult:
    if max_n > MAX_STRAND_N:
        raise ValueError(f"--max-n is limited to {MAX_STRAND_N}")
    result = StrandSuiteResult()
    for g in all_graphs(max_n, connected=connected_only):
        if not is_closed(g):
            continue
        report = closed_strand_check(g)
        result.checked += 1
        if not report.ok:
            result.failures.append(report)
        if progress:
            progress(report)
    return result


@dataclass(frozen=True)
class LollipopCase:
    m: int
    t: int
    formula: BettiTable
    oracle: BettiTable
    composition_mismatches: tuple[tuple[int, ...], ...]

    @property
    def ok(self) -> bool:
        return (
            self.formula == self.oracle
            and self.formula.pd == self.oracle.pd == self.m + self.t - 1
            and self.formula.reg == self.oracle.reg == self.t + 1
            and not self.composition_mismatches
        )


def lollipop_case(m: int, t: int) -> LollipopCase:
    g: Graph = make_k_handle_lollipop(m, [t])
    formula = betti_lollipop(m, [t])
    oracle = hochster_betti(in_graph(g).as_graph())
    bad = []
    for comp in compositions(t, m):
        if betti_lollipop(m, comp) != formula:
            bad.append(comp)
        elif formula_table(make_k_handle_lollipop(m, comp)) != formula:
            # peeling free cut edges off the actual k-handle graph must agree too
            bad.append(comp)
    return LollipopCase(m, t, formula, oracle, tuple(bad))


def verify_lollipop(max_m: int, max_t: int) -> list[LollipopCase]:
    return [lollipop_case(m, t) for m in range(2, max_m + 1) for t in range(1, max_t + 1)]
