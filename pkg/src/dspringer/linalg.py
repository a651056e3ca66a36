"""
Fraction-free row echelon form over the integers, used for exact ranks.

Rows are sparse ``{column: int}`` dicts.  Each stored row is kept primitive
(content 1), so entries stay small for the 0/±1 matrices built from
symmetric-function generators.  The rank is the rank over Q.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class EchelonBasis:
    """Incremental echelon basis keyed by pivot column (smallest column)."""

    def __init__(self):
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict[int, int]) -> dict[int, int]:
        row = {c: v for c, v in row.items() if v}
        done: dict[int, int] = {}
        while row:
            c = min(row)
            prow = self.rows.get(c)
            if prow is None:
                # c is not a pivot; move it aside and keep reducing the rest
                done[c] = row.pop(c)
                continue
            a, b = prow[c], row[c]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            if ma != 1:
                row = {k: v * ma for k, v in row.items()}
                done = {k: v * ma for k, v in done.items()}
            for k, v in prow.items():
                nv = row.get(k, 0) - mb * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return _primitive(done) if done else done

    def add(self, row: dict[int, int]) -> bool:
        """Insert a row; returns False if it was already in the span."""
        r = self.reduce(row)
        if not r:
            return False
        self.rows[min(r)] = r
        return True


def rank(rows: Iterable[dict[int, int]], ncols: int | None = None) -> int:
    eb = EchelonBasis()
    for r in rows:
        eb.add(r)
        if ncols is not None and eb.rank == ncols:
            break
    return eb.rank
