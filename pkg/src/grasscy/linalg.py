"""Exact linear algebra over Q: solve, nullspace, rank."""

from __future__ import annotations

from fractions import Fraction

Q = Fraction


def rref(rows: list[list[Q]]) -> tuple[list[list[Q]], list[int]]:
    """Reduced row echelon form (in place on a copy); returns (matrix, pivot columns)."""
    m = [list(map(Q, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(rows: list[list[Q]], ncols: int | None = None) -> list[list[Q]]:
    """Basis of the right nullspace of the matrix."""
    if not rows:
        n = ncols or 0
        return [[Q(1) if j == i else Q(0) for j in range(n)] for i in range(n)]
    n = len(rows[0])
    m, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * n
        v[f] = Q(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def solve(rows: list[list[Q]], rhs: list[Q]) -> list[Q] | None:
    """One particular solution of A x = b, or None if inconsistent."""
    if not rows:
        return []
    n = len(rows[0])
    aug = [list(map(Q, r)) + [Q(b)] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Q(0)] * n
    for r, p in enumerate(pivots):
        x[p] = m[r][n]
    return x


def rank(rows: list[list[Q]]) -> int:
    return len(rref(rows)[1])
