"""The polytope of partial alternating sign matrices attached to a skew shape.

The polytope is the convex hull of the profile matrices of all partitions
between lam and nu.  Its inequality description, checked computationally
throughout the test suite, is:

* all row and column partial sums lie in [0, 1];
* the first row and first column sum to exactly 1, all others to 0;
* entries in the lam region (j <= lam_i) are 0;
* entries strictly east of the border strip of nu are 0, i.e.
  X[1][j] = 0 for j > nu_1 + 1 and X[i][j] = 0 for j > nu_{i-1} + 1, i >= 2.

The t-th dilate scales only the inhomogeneous bounds: partial sums in
[0, t], first row/column sums t.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from ._linalg import affine_rank, convex_combination_exists
from .matrices import Matrix, vertex_matrix
from .shapes import Cell, SkewShape, enumerate_between

BRUTE_FREE_CELL_LIMIT = 16
DILATE_SIZE_LIMIT = 8
DILATE_T_LIMIT = 4


class DilateCount(NamedTuple):
    t: int
    count: int


class PasmPolytope:
    """H- and V-descriptions of the polytope for one skew shape."""

    __slots__ = ("shape", "_vertices")

    def __init__(self, shape: SkewShape):
        self.shape = shape
        self._vertices: list[Matrix] | None = None

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def n(self) -> int:
        return self.shape.n

    def fixed_zero_cells(self) -> frozenset[Cell]:
        """Cells forced to zero by the lam region and the strip shadow."""
        lam, nu = self.shape.lam, self.shape.nu
        zeros = set()
        for i in range(1, self.m + 1):
            for j in range(1, lam.part(i) + 1):
                zeros.add((i, j))
            east = nu.part(1) + 1 if i == 1 else nu.part(i - 1) + 1
            for j in range(east + 1, self.n + 1):
                zeros.add((i, j))
        return frozenset(zeros)

    def free_cells(self) -> tuple[Cell, ...]:
        zeros = self.fixed_zero_cells()
        return tuple(
            (i, j)
            for i in range(1, self.m + 1)
            for j in range(1, self.n + 1)
            if (i, j) not in zeros
        )

    def satisfies_inequalities(self, X: Matrix) -> bool:
        """Exact membership test against the inequality description."""
        if X.m != self.m or X.n != self.n:
            raise ValueError(f"expected a {self.m}x{self.n} matrix, got {X.m}x{X.n}")
        zeros = self.fixed_zero_cells()
        if any(X.entry(i, j) != 0 for (i, j) in zeros):
            return False
        col = [0] * (self.n + 1)
        for i in range(1, self.m + 1):
            row_sum = 0
            for j in range(1, self.n + 1):
                x = X.entry(i, j)
                row_sum += x
                col[j] += x
                if not (0 <= row_sum <= 1) or not (0 <= col[j] <= 1):
                    return False
            if row_sum != (1 if i == 1 else 0):
                return False
        if col[1] != 1:
            return False
        return all(col[j] == 0 for j in range(2, self.n + 1))

    def vertices(self) -> list[Matrix]:
        """Profile matrices of all partitions between lam and nu."""
        if self._vertices is None:
            self._vertices = [
                vertex_matrix(mu, self.m, self.n)
                for mu in enumerate_between(self.shape.lam, self.shape.nu)
            ]
        return list(self._vertices)

    def _scan_integer_points(self, t: int) -> Iterator[Matrix]:
        """All integer matrices of the t-dilate, by row-major backtracking.

        Row/column partial sums are kept in [0, t]; row targets are t for
        row 1 and 0 otherwise, column targets t for column 1 and 0 otherwise.
        """
        m, n = self.m, self.n
        zeros = self.fixed_zero_cells()
        free_in_row_after = [[0] * (n + 2) for _ in range(m + 1)]
        for i in range(1, m + 1):
            for j in range(n, 0, -1):
                free_in_row_after[i][j] = free_in_row_after[i][j + 1] + (
                    (i, j) not in zeros
                )
        last_free_row = [0] * (n + 1)
        for j in range(1, n + 1):
            for i in range(1, m + 1):
                if (i, j) not in zeros:
                    last_free_row[j] = i

        grid = [[0] * (n + 1) for _ in range(m + 1)]
        col_sum = [0] * (n + 1)

        def row_target(i: int) -> int:
            return t if i == 1 else 0

        def col_target(j: int) -> int:
            return t if j == 1 else 0

        def rec(i: int, j: int, row_sum: int) -> Iterator[Matrix]:
            if j > n:
                if row_sum != row_target(i):
                    return
                if i == m:
                    yield Matrix([row[1:] for row in grid[1:]])
                else:
                    yield from rec(i + 1, 1, 0)
                return
            if (i, j) in zeros:
                choices = (0,)
            else:
                lo = max(-row_sum, -col_sum[j])
                hi = min(t - row_sum, t - col_sum[j])
                choices = range(lo, hi + 1)
            remaining = free_in_row_after[i][j + 1]
            for x in choices:
                new_row = row_sum + x
                # The rest of the row can move the partial sum by at most t
                # per free cell (and not at all if none remain).
                if abs(row_target(i) - new_row) > remaining * t:
                    continue
                new_col = col_sum[j] + x
                # Once the last free cell of a column is placed, its partial
                # sum must already equal the column target.
                if i >= last_free_row[j] and new_col != col_target(j):
                    continue
                grid[i][j] = x
                col_sum[j] = new_col
                yield from rec(i, j + 1, new_row)
                col_sum[j] = col_sum[j] - x
                grid[i][j] = 0

        # A column with no free cell at all can never reach a nonzero target.
        for j in range(1, n + 1):
            if last_free_row[j] == 0 and col_target(j) != 0:
                return
        yield from rec(1, 1, 0)

    def integer_points_brute(self) -> list[Matrix]:
        """Exhaustive integer scan of the inequality system at t = 1.

        Guarded by the number of non-fixed cells, since fixed zeros prune the
        search space to the lam/nu corridor.
        """
        free = len(self.free_cells())
        if free > BRUTE_FREE_CELL_LIMIT:
            raise ValueError(
                f"instance too large for the brute scan ({free} free cells > "
                f"{BRUTE_FREE_CELL_LIMIT})"
            )
        return list(self._scan_integer_points(1))

    def dimension(self) -> int:
        """Affine dimension of the vertex set, by exact rank computation."""
        return affine_rank([v.flatten() for v in self.vertices()])

    def dilate_lattice_points(self, t: int) -> DilateCount:
        """Number of integer matrices in the t-th dilate, by direct scan."""
        if t < 0:
            raise ValueError("dilation factor must be nonnegative")
        if self.shape.size > DILATE_SIZE_LIMIT or t > DILATE_T_LIMIT:
            raise ValueError(
                f"dilate scan guardrail exceeded (|nu/lam| <= {DILATE_SIZE_LIMIT}, "
                f"t <= {DILATE_T_LIMIT})"
            )
        count = sum(1 for _ in self._scan_integer_points(t))
        return DilateCount(t, count)

    def dilate_integer_points(self, t: int) -> list[Matrix]:
        """The integer matrices of the t-th dilate themselves."""
        if t < 0:
            raise ValueError("dilation factor must be nonnegative")
        if self.shape.size > DILATE_SIZE_LIMIT or t > DILATE_T_LIMIT:
            raise ValueError("dilate scan guardrail exceeded")
        return list(self._scan_integer_points(t))

    def __repr__(self) -> str:
        return f"PasmPolytope({self.shape!r})"


def is_extreme(X: Matrix, others: list[Matrix]) -> bool:
    """True iff X is not a convex combination of the given matrices."""
    if any(o.m != X.m or o.n != X.n for o in others):
        raise ValueError("mixed dimensions")
    if not others:
        return True
    return not convex_combination_exists(X.flatten(), [o.flatten() for o in others])
