"""Exact linear algebra over any field with Python arithmetic operators.

Entries may be `Fraction` or `CyclotomicNumber` (anything supporting
+, -, *, /, == and truthiness).  Rank uses Bareiss's fraction-free
elimination: the only divisions are by previous pivots and are exact, which
keeps intermediate entries from ballooning the way naive cross-multiplication
does.
"""

from __future__ import annotations


def exact_rank(rows) -> int:
    """Rank of a matrix given as a list of rows (not modified)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    col = 0
    while rank < nrows and col < ncols:
        pivot_row = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot_row is None:
            col += 1
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            row_i, row_p = m[i], m[rank]
            head = row_i[col]
            for j in range(col, ncols):
                row_i[j] = (pivot * row_i[j] - head * row_p[j]) / prev
        prev = pivot
        rank += 1
        col += 1
    return rank


def is_invertible(rows) -> bool:
    return len(rows) > 0 and len(rows) == len(rows[0]) == exact_rank(rows)
