"""Exact rank of sparse integer matrices.

Rows are dicts {column: value}.  Elimination is fraction-free: each update
row is rescaled by its gcd, which keeps entries small and leaves the rank
unchanged.  Pivots of absolute value 1 are preferred so that most updates
never grow entries at all (the matrices produced by the cohomology engine
are sign/incidence matrices).
"""

from __future__ import annotations

from math import gcd


def _reduce_row(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_int(rows: list[dict[int, int]]) -> int:
    rows = [_reduce_row({c: v for c, v in r.items() if v}) for r in rows]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot_idx = None
        for i, r in enumerate(rows):
            if any(abs(v) == 1 for v in r.values()):
                pivot_idx = i
                break
        if pivot_idx is None:
            pivot_idx = 0
        pivot_row = rows.pop(pivot_idx)
        col, pval = None, None
        for c, v in pivot_row.items():
            if abs(v) == 1:
                col, pval = c, v
                break
        if col is None:
            col, pval = next(iter(pivot_row.items()))
        rank += 1
        new_rows = []
        for r in rows:
            w = r.get(col)
            if w:
                # p*r - w*pivot kills the pivot column exactly
                merged = {c: pval * v for c, v in r.items()}
                for c, v in pivot_row.items():
                    merged[c] = merged.get(c, 0) - w * v
                merged = _reduce_row({c: v for c, v in merged.items() if v})
                if merged:
                    new_rows.append(merged)
            else:
                new_rows.append(r)
        rows = new_rows
    return rank
