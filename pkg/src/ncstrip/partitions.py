"""Integer partitions and exact big-integer counting primitives.

A partition is stored as a tuple of weakly decreasing positive ints; the
empty tuple () is the empty partition.  The canonical order used everywhere
(CLI output, expansion serialization, enumeration) is ascending weight,
then reverse-lexicographic within a weight.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Iterator

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Validate and normalize an iterable of parts into a partition tuple."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"partition parts must be positive, got {x}")
        if i and p[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def weight(p: Partition) -> int:
    return sum(p)


def length(p: Partition) -> int:
    return len(p)


def multiplicity_product(p: Partition) -> int:
    """Product of factorials of the part multiplicities; 1 for ()."""
    out = 1
    for m in Counter(p).values():
        out *= math.factorial(m)
    return out


def partition_sort_key(p: Partition):
    """Canonical order key: ascending weight, then reverse-lexicographic."""
    return (sum(p), tuple(-x for x in p))


def partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of m in reverse-lexicographic (descending) order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        yield ()
        return
    top = m if max_part is None else min(m, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(m - first, first):
            yield (first,) + rest


def partitions_with_weight_at_most(n: int) -> list[Partition]:
    """Every partition of every 0 <= m <= n, in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []
    for m in range(n + 1):
        out.extend(partitions_of(m))
    return out


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) is outside the domain 0 <= k <= n")
    return math.comb(n, k)


def exact_div(a: int, b: int) -> int:
    """Integer division that refuses to truncate."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return exact_div(math.comb(2 * n, n), n + 1)


def fuss_catalan(n: int, k: int) -> int:
    """binomial((k+1)n, n) / (kn+1); equals catalan(n) at k = 1."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return exact_div(math.comb((k + 1) * n, n), k * n + 1)


def format_partition(p: Partition) -> str:
    """Literal form: "2,1"; "-" for the empty partition."""
    return ",".join(str(x) for x in p) if p else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-"):
        return ()
    return as_partition(int(x) for x in text.split(","))
