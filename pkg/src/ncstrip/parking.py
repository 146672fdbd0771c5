"""Classical and shape-relative parking functions.

A sequence of positive integers parks when its sorted rearrangement b
satisfies b_i <= i; it is primitive when already weakly increasing.  A
primitive parking function of length n is the same thing as a horizontal
strip in the staircase shape (heights plus one), which extends the notion
to arbitrary skew shapes.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations

from .bijections import path_to_noncrossing
from .noncrossing_a import Blocks
from .partitions import Partition
from .shapes import SkewShape, enumerate_horizontal_strips


def is_parking_function(seq) -> bool:
    seq = list(seq)
    if not seq or any(x < 1 for x in seq):
        return False
    return all(b <= i for i, b in enumerate(sorted(seq), start=1))


def is_primitive(seq) -> bool:
    seq = list(seq)
    return is_parking_function(seq) and all(
        seq[i] <= seq[i + 1] for i in range(len(seq) - 1)
    )


def pf_type(seq) -> Partition:
    """Sorted multiplicities of the values; requires a parking function."""
    seq = list(seq)
    if not is_parking_function(seq):
        raise ValueError(f"{seq} is not a parking function")
    return tuple(sorted(Counter(seq).values(), reverse=True))


def enumerate_primitive(n: int) -> list[tuple[int, ...]]:
    """Weakly increasing parking functions of length n; catalan(n) of them."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[tuple[int, ...]] = []
    seq = [0] * n

    def rec(i: int, low: int):
        if i == n:
            out.append(tuple(seq))
            return
        for v in range(low, i + 2):  # b_{i+1} <= i+1
            seq[i] = v
            rec(i + 1, v)

    rec(0, 1)
    return out


def enumerate_parking_functions(n: int) -> list[tuple[int, ...]]:
    """All parking functions of length n; (n+1)^(n-1) of them."""
    out = set()
    for prim in enumerate_primitive(n):
        out.update(permutations(prim))
    return sorted(out)


def primitive_pf_to_ncp(seq) -> Blocks:
    """Noncrossing partition of the same type as a primitive parking function.

    Realized through the Dyck path whose i-th ascent length is the
    multiplicity of the value i, followed by the labeling bijection.
    """
    seq = list(seq)
    if not is_primitive(seq):
        raise ValueError(f"{seq} is not a primitive parking function")
    n = len(seq)
    mult = Counter(seq)
    word = "".join("E" * mult.get(i, 0) + "N" for i in range(1, n + 1))
    return path_to_noncrossing(word, n, 1)


def enumerate_shape_parking_functions(
    shape: SkewShape, primitive_only: bool = False
) -> list[tuple[int, ...]]:
    """Parking functions relative to a shape, as box height sequences.

    Primitive ones are the height sequences of the shape's horizontal
    strips; general ones are all distinct permutations of those.
    """
    primitives = enumerate_horizontal_strips(shape)
    if primitive_only:
        return sorted(primitives)
    out = set()
    for heights in primitives:
        out.update(permutations(heights))
    return sorted(out)
