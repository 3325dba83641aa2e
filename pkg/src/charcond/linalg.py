"""Exact Gaussian elimination over cyclotomic numbers."""

from __future__ import annotations

from .cyclo import CycloNum, ZERO


def solve(rows: list[list[CycloNum]], rhs: list[CycloNum]) -> list[CycloNum] | None:
    """Solve a (possibly overdetermined) linear system exactly.

    Returns None when inconsistent.  Free columns, if any, are set to zero;
    callers that need uniqueness should check rank first.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c].invert()
        aug[r] = [x * pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][-1]:
            return None
    sol = [ZERO] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][-1]
    return sol


def rank(rows: list[list[CycloNum]]) -> int:
    if not rows:
        return 0
    mat = [row[:] for row in rows]
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c].invert()
        mat[r] = [x * pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r
