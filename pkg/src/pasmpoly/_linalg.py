"""Exact rational linear algebra: rank and convex-combination feasibility.

Everything here runs over ``fractions.Fraction``; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Scalar = int | Fraction


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of the row span, by Gaussian elimination over the rationals."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def affine_rank(points: Sequence[Sequence[Scalar]]) -> int:
    """Dimension of the affine hull of the given points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([[x - b for x, b in zip(p, base)] for p in points[1:]])


def _phase1_simplex(A: list[list[Fraction]], b: list[Fraction]) -> bool:
    """Feasibility of {x >= 0 : A x = b} via a phase-1 simplex with Bland's rule."""
    m, n = len(A), (len(A[0]) if A else 0)
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # Tableau over original variables plus one artificial per row.
    tab = [A[i] + [Fraction(1) if k == i else Fraction(0) for k in range(m)] + [b[i]]
           for i in range(m)]
    basis = [n + i for i in range(m)]
    total = n + m
    # Objective: minimize the sum of artificials; reduced costs of z = sum of
    # artificial rows (artificials are basic with cost 1).
    cost = [Fraction(0)] * (total + 1)
    for i in range(m):
        for k in range(total + 1):
            cost[k] += tab[i][k]
    while True:
        # Entering candidates are original variables only: an artificial that
        # leaves the basis is never re-admitted (its column may be dropped
        # without changing feasibility of the phase-1 optimum).
        entering = next(
            (k for k in range(n) if k not in basis and cost[k] > 0), None
        )
        if entering is None:
            break
        # Ratio test, Bland's tie-break on basis variable index.
        leaving, best = None, None
        for i in range(m):
            if tab[i][entering] > 0:
                ratio = tab[i][total] / tab[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:
            # Unbounded phase-1 objective cannot happen (bounded below by 0);
            # treat defensively as infeasible.
            return False
        piv = tab[leaving][entering]
        tab[leaving] = [x / piv for x in tab[leaving]]
        for i in range(m):
            if i != leaving and tab[i][entering] != 0:
                f = tab[i][entering]
                tab[i] = [a - f * c for a, c in zip(tab[i], tab[leaving])]
        f = cost[entering]
        cost = [a - f * c for a, c in zip(cost, tab[leaving])]
        basis[leaving] = entering
    return cost[total] == 0


def convex_combination_exists(
    target: Sequence[Scalar], others: Sequence[Sequence[Scalar]]
) -> bool:
    """True iff target = sum c_k * others[k] with c >= 0 and sum c = 1."""
    if not others:
        return False
    dim = len(target)
    if any(len(o) != dim for o in others):
        raise ValueError("mixed vector dimensions")
    A = [[Fraction(o[i]) for o in others] for i in range(dim)]
    b = [Fraction(x) for x in target]
    A.append([Fraction(1)] * len(others))
    b.append(Fraction(1))
    return _phase1_simplex(A, b)
