"""Exact matrix rank for sparse integer matrices.

Rows are dicts ``column -> value``. Over the rationals the reduction is
fraction-free: a row is cleared against a pivot row by cross-multiplication
and then divided by the gcd of its entries, so everything stays an integer
and no :class:`fractions.Fraction` is ever created.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

SparseRow = dict[int, int]


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank(rows: Iterable[SparseRow], prime: int | None = None) -> int:
    """Rank over Q (``prime=None``) or over GF(prime)."""
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        if prime is None:
            cur = {c: v for c, v in row.items() if v}
        else:
            cur = {c: v % prime for c, v in row.items() if v % prime}
        while cur:
            lead = min(cur)
            piv = pivots.get(lead)
            if piv is None:
                if prime is not None:
                    inv = pow(cur[lead], -1, prime)
                    cur = {c: v * inv % prime for c, v in cur.items()}
                pivots[lead] = cur
                break
            a, p = cur[lead], piv[lead]
            if prime is None:
                # cur <- p*cur - a*piv, fraction-free
                new = {c: p * v for c, v in cur.items()} if p != 1 else dict(cur)
                for c, v in piv.items():
                    x = new.get(c, 0) - a * v
                    if x:
                        new[c] = x
                    else:
                        new.pop(c, None)
                cur = _primitive(new)
            else:
                new = dict(cur)
                for c, v in piv.items():
                    x = (new.get(c, 0) - a * v) % prime
                    if x:
                        new[c] = x
                    else:
                        new.pop(c, None)
                cur = new
    return len(pivots)


def dense_rank(matrix: list[list[int]], prime: int | None = None) -> int:
    return rank(({c: v for c, v in enumerate(r) if v} for r in matrix), prime)
