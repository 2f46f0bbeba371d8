"""The cell poset of a skew shape, its order polytope, and counting tools.

Cells (i, j) are ordered componentwise: (i, j) <= (i', j') iff i <= i' and
j <= j'.  Elements are kept in row-major order, which is itself a linear
extension; that fact is exploited throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

from .shapes import Cell, SkewShape

Scalar = int | Fraction


class SkewPoset:
    """Poset on the cells of a skew shape, stored as elements plus covers."""

    __slots__ = ("elements", "covers", "_index", "_up", "_down")

    def __init__(self, elements: Sequence[Cell], covers: Sequence[tuple[int, int]]):
        self.elements: tuple[Cell, ...] = tuple(elements)
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(covers))
        self._index = {c: k for k, c in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate poset elements")
        up: list[list[int]] = [[] for _ in self.elements]
        down: list[list[int]] = [[] for _ in self.elements]
        for a, b in self.covers:
            if not (0 <= a < len(self.elements) and 0 <= b < len(self.elements)):
                raise ValueError(f"cover ({a},{b}) out of range")
            if a >= b:
                raise ValueError("covers must go from smaller to larger row-major index")
            up[a].append(b)
            down[b].append(a)
        self._up = tuple(tuple(v) for v in up)
        self._down = tuple(tuple(v) for v in down)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, cell: Cell) -> int:
        return self._index[cell]

    def upper_covers(self, k: int) -> tuple[int, ...]:
        return self._up[k]

    def lower_covers(self, k: int) -> tuple[int, ...]:
        return self._down[k]

    def minimal_indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(len(self.elements)) if not self._down[k])

    def maximal_indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(len(self.elements)) if not self._up[k])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewPoset)
            and self.elements == other.elements
            and self.covers == other.covers
        )

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"SkewPoset({len(self.elements)} elements, {len(self.covers)} covers)"

    def to_json(self) -> dict:
        return {
            "elements": [list(c) for c in self.elements],
            "covers": [list(c) for c in self.covers],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SkewPoset":
        return cls(
            [tuple(c) for c in data["elements"]],
            [tuple(c) for c in data["covers"]],
        )


def build_poset(shape: SkewShape) -> SkewPoset:
    """Componentwise-order poset on the cells of the shape.

    Covers are the east and south neighbor pairs that both lie in the shape.
    """
    elems = shape.cells()
    present = set(elems)
    index = {c: k for k, c in enumerate(elems)}
    covers = []
    for (i, j) in elems:
        for nxt in ((i, j + 1), (i + 1, j)):
            if nxt in present:
                covers.append((index[(i, j)], index[nxt]))
    return SkewPoset(elems, covers)


def in_order_polytope(P: SkewPoset, f: Mapping[Cell, Scalar]) -> bool:
    """True iff f maps every element into [0,1] monotonically along covers."""
    vals = []
    for c in P.elements:
        if c not in f:
            raise ValueError(f"point is missing a value for element {c}")
        vals.append(f[c])
    if any(v < 0 or v > 1 for v in vals):
        return False
    return all(vals[a] <= vals[b] for a, b in P.covers)


def count_linear_extensions(P: SkewPoset) -> int:
    """Number of order-preserving bijections onto {1,...,|P|}.

    Counted by peeling maximal elements from downsets, memoized on the
    downset bitmask.
    """
    d = len(P)
    if d == 0:
        return 1
    up_mask = [0] * d
    for a, b in P.covers:
        up_mask[a] |= 1 << b
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            rest ^= low
            if up_mask[k] & mask == 0:
                total += count(mask ^ low)
        memo[mask] = total
        return total

    return count((1 << d) - 1)


def linear_extensions(P: SkewPoset) -> Iterator[tuple[int, ...]]:
    """All linear extensions as tuples of element indices, low to high."""
    d = len(P)
    if d == 0:
        yield ()
        return
    placed = [False] * d
    remaining_down = [len(P.lower_covers(k)) for k in range(d)]
    order: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(order) == d:
            yield tuple(order)
            return
        for k in range(d):
            if not placed[k] and remaining_down[k] == 0:
                placed[k] = True
                for b in P.upper_covers(k):
                    remaining_down[b] -= 1
                order.append(k)
                yield from rec()
                order.pop()
                for b in P.upper_covers(k):
                    remaining_down[b] += 1
                placed[k] = False

    yield from rec()


def enumerate_order_preserving_maps(P: SkewPoset, t: int) -> Iterator[tuple[int, ...]]:
    """All order-preserving maps into {1,...,t}, as value tuples over elements.

    Relies on the row-major element order being a linear extension, so each
    element's lower covers are assigned before it.
    """
    if t < 1:
        raise ValueError("the target chain must have at least one element")
    d = len(P)
    vals = [0] * d

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == d:
            yield tuple(vals)
            return
        lo = 1
        for p in P.lower_covers(k):
            if vals[p] > lo:
                lo = vals[p]
        for v in range(lo, t + 1):
            vals[k] = v
            yield from rec(k + 1)

    yield from rec(0)


def _order_polynomial_brute(P: SkewPoset, t: int) -> int:
    d = len(P)
    count = 0

    def rec(k: int, vals: list[int]) -> int:
        if k == d:
            return 1
        lo = 1
        for p in P.lower_covers(k):
            if vals[p] > lo:
                lo = vals[p]
        total = 0
        for v in range(lo, t + 1):
            vals[k] = v
            total += rec(k + 1, vals)
        return total

    count = rec(0, [0] * d)
    return count


def _order_polynomial_extensions(P: SkewPoset, t: int) -> int:
    """Order polynomial as a descent-weighted sum over linear extensions.

    Each extension w contributes binom(t + d - 1 - des(w), d), where des(w)
    counts positions where the natural (row-major) labels decrease.
    """
    d = len(P)
    if d == 0:
        return 1
    total = 0
    for w in linear_extensions(P):
        des = sum(1 for a, b in zip(w, w[1:]) if a > b)
        total += comb(t + d - 1 - des, d)
    return total


def order_polynomial_value(P: SkewPoset, t: int, method: str = "auto") -> int:
    """Number of order-preserving maps from P into a t-chain."""
    if t < 1:
        raise ValueError("order polynomial is defined for positive t")
    d = len(P)
    if method == "auto":
        method = "brute" if t**d <= 500_000 else "extensions"
    if method == "brute":
        return _order_polynomial_brute(P, t)
    if method == "extensions":
        if d > 15:
            raise ValueError("extension enumeration is capped at 15 elements")
        return _order_polynomial_extensions(P, t)
    raise ValueError(f"unknown method {method!r}")


def enumerate_ideals(P: SkewPoset) -> list[frozenset[Cell]]:
    """All down-closed subsets, each once."""
    d = len(P)
    chosen = [False] * d
    out: list[frozenset[Cell]] = []

    def rec(k: int) -> None:
        if k == d:
            out.append(frozenset(P.elements[i] for i in range(d) if chosen[i]))
            return
        # excluding k is always allowed for a downset prefix
        chosen[k] = False
        rec(k + 1)
        if all(chosen[p] for p in P.lower_covers(k)):
            chosen[k] = True
            rec(k + 1)
            chosen[k] = False

    rec(0)
    return out


def enumerate_filters(P: SkewPoset) -> list[frozenset[Cell]]:
    """All up-closed subsets; indicator functions of these are exactly the
    0/1 points of the order polytope."""
    all_cells = frozenset(P.elements)
    filters = [all_cells - ideal for ideal in enumerate_ideals(P)]
    return sorted(filters, key=lambda s: (len(s), sorted(s)))


def filter_indicator(P: SkewPoset, filt: frozenset[Cell]) -> dict[Cell, int]:
    return {c: (1 if c in filt else 0) for c in P.elements}


class UniPoly:
    """Univariate polynomial with exact coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)
                for c in self.coeffs]


def interpolate_polynomial(values: Sequence[tuple[Scalar, Scalar]]) -> UniPoly:
    """Unique interpolating polynomial through the given (t, value) samples."""
    xs = [Fraction(x) for x, _ in values]
    ys = [Fraction(y) for _, y in values]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissae")
    # Lagrange accumulation over exact rationals.
    n = len(xs)
    coeffs = [Fraction(0)] * max(n, 1)
    for k in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for l in range(n):
            if l == k:
                continue
            # multiply basis by (x - xs[l])
            nxt = [Fraction(0)] * (len(basis) + 1)
            for p, c in enumerate(basis):
                nxt[p] -= c * xs[l]
                nxt[p + 1] += c
            basis = nxt
            denom *= xs[k] - xs[l]
        scale = ys[k] / denom
        for p, c in enumerate(basis):
            coeffs[p] += scale * c
    return UniPoly(coeffs)


def order_polynomial(P: SkewPoset, method: str = "auto") -> UniPoly:
    """The order polynomial of P, interpolated from |P|+1 exact values."""
    d = len(P)
    samples = [(t, order_polynomial_value(P, t, method=method)) for t in range(1, d + 2)]
    return interpolate_polynomial(samples)


def leading_term_check(P: SkewPoset) -> bool:
    """Degree-|P| leading coefficient of the order polynomial equals e(P)/|P|!."""
    poly = order_polynomial(P)
    d = len(P)
    if d == 0:
        return poly == UniPoly([1])
    return poly.degree == d and poly.leading_coefficient == Fraction(
        count_linear_extensions(P), factorial(d)
    )
