"""Tiny exact linear algebra over a finite field (Gaussian elimination)."""

from __future__ import annotations

from typing import Sequence

from .finite_field import FieldElement


def rank(rows: Sequence[Sequence[FieldElement]]) -> int:
    """Rank of a matrix given as a sequence of rows of field elements."""
    work = [list(row) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][col].inverse()
        work[r] = [entry * inv for entry in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def is_nonsingular(rows: Sequence[Sequence[FieldElement]]) -> bool:
    """True when the square matrix has full rank."""
    n = len(rows)
    assert all(len(row) == n for row in rows), "matrix must be square"
    return rank(rows) == n
