"""Shape families used by sweep tests and the acceptance suite."""

from pasmpoly import Partition, SkewShape, enumerate_between
from pasmpoly.shapes import partitions_of_size_at_most


def all_skew_shapes(max_outer_size: int, max_skew_size: int | None = None) -> list[SkewShape]:
    """Every (lam, nu) pair with |nu| bounded, in minimal ambient boxes."""
    shapes = []
    for nu in partitions_of_size_at_most(max_outer_size):
        for lam in enumerate_between(Partition(), nu):
            if max_skew_size is not None and nu.size - lam.size > max_skew_size:
                continue
            shapes.append(SkewShape(nu, lam))
    return shapes


def staircase(n: int) -> Partition:
    return Partition(range(n - 1, 0, -1))
