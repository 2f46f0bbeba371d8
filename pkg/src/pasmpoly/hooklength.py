"""Hook numbers, excited diagrams, and skew standard tableau counting.

The count of linear extensions of a skew-shape cell poset is evaluated as

    |nu/lam|! * sum over excited diagrams D of prod over cells of nu not
    in D of 1/h(cell)

with all arithmetic exact; the sum is asserted to be integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .shapes import Cell, Partition, contains


def hooks(nu: Partition) -> dict[Cell, int]:
    """Hook number arm + leg + 1 for every cell of nu."""
    conj = nu.conjugate()
    return {
        (i, j): nu.part(i) - j + conj.part(j) - i + 1
        for i in range(1, len(nu) + 1)
        for j in range(1, nu.part(i) + 1)
    }


def excited_diagrams(nu: Partition, lam: Partition) -> list[frozenset[Cell]]:
    """All cell sets reachable from the diagram of lam by excited moves.

    A cell (i,j) of the diagram moves to (i+1,j+1) when none of (i,j+1),
    (i+1,j), (i+1,j+1) is occupied and (i+1,j+1) lies in nu.  Search is
    breadth-first with deduplication; the start diagram is included.
    """
    if not contains(lam, nu):
        raise ValueError(f"{lam!r} is not contained in {nu!r}")
    ambient = nu.diagram()
    start = frozenset(lam.diagram())
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for diag in frontier:
            for (i, j) in diag:
                if (
                    (i, j + 1) not in diag
                    and (i + 1, j) not in diag
                    and (i + 1, j + 1) not in diag
                    and (i + 1, j + 1) in ambient
                ):
                    moved = (diag - {(i, j)}) | {(i + 1, j + 1)}
                    if moved not in seen:
                        seen.add(moved)
                        nxt.append(moved)
        frontier = nxt
    return sorted(seen, key=lambda d: sorted(d))


def naruse_count(nu: Partition, lam: Partition) -> int:
    """Number of linear extensions of the nu/lam cell poset, via the
    excited-diagram hook sum.  Exact; raises if the sum is not integral."""
    if not contains(lam, nu):
        raise ValueError(f"{lam!r} is not contained in {nu!r}")
    h = hooks(nu)
    ambient = nu.diagram()
    total = Fraction(0)
    for diag in excited_diagrams(nu, lam):
        prod = Fraction(1)
        for cell in ambient - diag:
            prod /= h[cell]
        total += prod
    result = factorial(nu.size - lam.size) * total
    if result.denominator != 1:
        raise ArithmeticError(f"hook sum produced non-integer {result}")
    return int(result)
