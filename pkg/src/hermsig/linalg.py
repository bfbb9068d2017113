"""Exact linear algebra over the rationals.

All matrices are lists of lists of Fraction; nothing here ever touches a
float.  Sizes stay small (rank <= 8 for Cartan data, a few hundred for
representation Gram blocks), so plain Gaussian elimination is enough.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Q = Fraction


def zeros(n: int, m: int) -> list[list[Q]]:
    return [[Q(0)] * m for _ in range(n)]


def identity(n: int) -> list[list[Q]]:
    mat = zeros(n, n)
    for i in range(n):
        mat[i][i] = Q(1)
    return mat


def mat_vec(mat: Sequence[Sequence[Q]], vec: Sequence[Q]) -> list[Q]:
    return [sum((row[j] * vec[j] for j in range(len(vec))), Q(0)) for row in mat]


def mat_mul(a: Sequence[Sequence[Q]], b: Sequence[Sequence[Q]]) -> list[list[Q]]:
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        for t in range(k):
            ait = a[i][t]
            if ait:
                row = b[t]
                orow = out[i]
                for j in range(m):
                    orow[j] += ait * row[j]
    return out


def invert(mat: Sequence[Sequence[Q]]) -> list[list[Q]]:
    """Exact inverse by Gauss-Jordan elimination; ValueError if singular."""
    n = len(mat)
    work = [list(map(Q, row)) + irow for row, irow in zip(mat, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = Q(1) / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def solve(mat: Sequence[Sequence[Q]], rhs: Sequence[Q]) -> list[Q]:
    """Solve mat @ x = rhs for square invertible mat."""
    n = len(mat)
    work = [list(map(Q, row)) + [Q(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = Q(1) / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [work[i][n] for i in range(n)]


def rank_profile(mat: Sequence[Sequence[Q]]) -> list[int]:
    """Indices of a lexicographically earliest maximal independent column set."""
    if not mat:
        return []
    n, m = len(mat), len(mat[0])
    work = [list(row) for row in mat]
    pivots: list[int] = []
    row = 0
    for col in range(m):
        pivot = next((r for r in range(row, n) if work[r][col]), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        inv = Q(1) / work[row][col]
        work[row] = [x * inv for x in work[row]]
        for r in range(n):
            if r != row and work[r][col]:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return pivots


def symmetric_pivot_signs(mat: Sequence[Sequence[Q]]) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric rational matrix.

    Symmetric Gaussian congruence: the signs of the pivots met along the way
    give the inertia by Sylvester's law.  When every remaining diagonal entry
    vanishes but the block does not, a row addition brings a nonzero entry to
    the diagonal without changing the inertia.
    """
    n = len(mat)
    work = [list(map(Q, row)) for row in mat]
    pos = neg = 0
    used = 0
    while used < n:
        pivot = next((i for i in range(used, n) if work[i][i]), None)
        if pivot is None:
            spot = next(
                ((i, j) for i in range(used, n) for j in range(i + 1, n) if work[i][j]),
                None,
            )
            if spot is None:
                break
            i, j = spot
            for k in range(n):
                work[i][k] += work[j][k]
            for k in range(n):
                work[k][i] += work[k][j]
            pivot = i
        if pivot != used:
            work[used], work[pivot] = work[pivot], work[used]
            for row in work:
                row[used], row[pivot] = row[pivot], row[used]
        d = work[used][used]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(used + 1, n):
            if work[r][used]:
                factor = work[r][used] / d
                for k in range(n):
                    work[r][k] -= factor * work[used][k]
                for k in range(n):
                    work[k][r] -= factor * work[k][used]
        used += 1
    return pos, neg, n - pos - neg


def is_positive_definite(mat: Sequence[Sequence[Q]]) -> bool:
    n = len(mat)
    pos, _neg, _zero = symmetric_pivot_signs(mat)
    return pos == n
