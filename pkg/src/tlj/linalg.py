"""Exact Gaussian elimination over any field of library scalars."""

from __future__ import annotations

from .errors import ShapeMismatch


def _eliminate(rows: list[list], zero, one):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = one / rows[r][c]
        rows[r] = [x * inv if x else zero for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _unit(matrix):
    for row in matrix:
        for x in row:
            return x * 0, x * 0 + 1
    raise ShapeMismatch("empty matrix")


def rank(matrix) -> int:
    if not matrix or not matrix[0]:
        return 0
    zero, one = _unit(matrix)
    rows = [list(r) for r in matrix]
    return len(_eliminate(rows, zero, one))


def solve_combination(columns: list[list], target: list):
    """Coefficients ``x`` with ``sum_i x[i] * columns[i] == target``, or ``None``.

    Requires the columns to be linearly independent; the solution is then
    unique and is checked against every row.
    """
    if not columns:
        return [] if all(not t for t in target) else None
    n = len(target)
    if any(len(c) != n for c in columns):
        raise ShapeMismatch("column lengths differ")
    zero, one = _unit([target + [x for c in columns for x in c]])
    rows = [[c[r] for c in columns] + [target[r]] for r in range(n)]
    pivots = _eliminate(rows, zero, one)
    k = len(columns)
    if k in pivots:
        return None  # inconsistent
    if len(pivots) < k:
        raise ArithmeticError("columns are linearly dependent")
    sol = [zero] * k
    for r, c in enumerate(pivots):
        sol[c] = rows[r][k]
    return sol


def matmul(A, B, zero):
    return [
        [sum((A[i][t] * B[t][j] for t in range(len(B))), zero) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def identity_matrix(n: int, zero, one):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]
