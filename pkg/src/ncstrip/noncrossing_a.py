"""Noncrossing set partitions of [n], k-divisibility, and their counting.

A partition is stored canonically as a tuple of blocks, each block a tuple
of elements in increasing order, blocks sorted by their minimum.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .partitions import (
    Partition,
    as_partition,
    exact_div,
    factorial,
    multiplicity_product,
    weight,
)

Blocks = tuple[tuple[int, ...], ...]


def canonical_blocks(blocks: Iterable[Iterable[int]]) -> Blocks:
    out = tuple(tuple(sorted(b)) for b in blocks)
    return tuple(sorted(out, key=lambda b: b[0]))


def validate_set_partition(blocks, n: int) -> Blocks:
    blocks = canonical_blocks(blocks)
    seen: list[int] = []
    for b in blocks:
        if not b:
            raise ValueError("empty block")
        seen.extend(b)
    if sorted(seen) != list(range(1, n + 1)):
        raise ValueError(f"blocks do not partition [1..{n}]")
    return blocks


def blocks_noncrossing(blocks: Iterable[Iterable[int]]) -> bool:
    """No quadruple a < b < c < d with a,c in one block and b,d in another.

    Works for blocks over any integer ground set (used for type B too, on
    polygon positions).  Equivalent to the quadruple scan: between any two
    consecutive members of a block, only whole blocks may appear.
    """
    blocks = [sorted(b) for b in blocks]
    lo = {}
    hi = {}
    for i, b in enumerate(blocks):
        for x in b:
            lo[x] = b[0]
            hi[x] = b[-1]
    for b in blocks:
        for a, c in zip(b, b[1:]):
            for x in range(a + 1, c):
                if x in lo and not (a < lo[x] and hi[x] < c):
                    return False
    return True


def is_noncrossing(blocks, n: int | None = None) -> bool:
    """Crossing test for a set partition of [n]."""
    if n is not None:
        blocks = validate_set_partition(blocks, n)
    return blocks_noncrossing(blocks)


def noncrossing_partitions_of_seq(seq, k: int = 1) -> Iterator[Blocks]:
    """Noncrossing partitions of a linearly ordered ground sequence.

    Every block size must be divisible by k.  Each partition is yielded
    exactly once, as canonical blocks of the sequence's values.
    """
    seq = list(seq)
    n = len(seq)
    if n == 0:
        yield ()
        return
    done: list[list[int]] = []
    stack: list[list[int]] = []

    def deficit() -> int:
        return sum((-len(b)) % k for b in stack)

    def rec(i: int) -> Iterator[Blocks]:
        if deficit() > n - i:
            return
        if i == n:
            yield canonical_blocks(done + stack)
            return
        x = seq[i]
        # start a new block
        stack.append([x])
        yield from rec(i + 1)
        stack.pop()
        # join an open block, closing everything nested above it
        if stack:
            stack[-1].append(x)
            yield from rec(i + 1)
            stack[-1].pop()
        closed = []
        while len(stack) > 1 and len(stack[-1]) % k == 0:
            closed.append(stack.pop())
            done.append(closed[-1])
            stack[-1].append(x)
            yield from rec(i + 1)
            stack[-1].pop()
        while closed:
            done.pop()
            stack.append(closed.pop())

    yield from rec(0)


def enumerate_k_divisible(n: int, k: int) -> list[Blocks]:
    """All of NC_n^(k): noncrossing partitions of [kn], blocks divisible by k."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return sorted(noncrossing_partitions_of_seq(range(1, k * n + 1), k))


def enumerate_nc_a(n: int) -> list[Blocks]:
    return enumerate_k_divisible(n, 1)


def type_a(blocks, k: int = 1) -> Partition:
    """Sorted block sizes, each divided by k."""
    sizes = sorted((len(b) for b in blocks), reverse=True)
    for s in sizes:
        if s % k:
            raise ValueError(f"block size {s} is not divisible by {k}")
    return tuple(s // k for s in sizes)


def reduced_type_a(blocks, k: int = 1) -> Partition:
    """Type after deleting the block containing the symbol 1."""
    rest = [b for b in blocks if 1 not in b]
    if len(rest) != len(tuple(blocks)) - 1:
        raise ValueError("no unique block contains the symbol 1")
    return type_a(rest, k)


def canonical_listing(blocks) -> Blocks:
    """Blocks sorted by minimum, elements ascending."""
    return canonical_blocks(blocks)


def count_by_type(n: int, k: int, zeta: Partition) -> int:
    """Number of partitions in NC_n^(k) with type zeta (a partition of n)."""
    zeta = as_partition(zeta)
    if weight(zeta) != n:
        raise ValueError(f"type must be a partition of {n}, got weight {weight(zeta)}")
    kn = k * n
    return exact_div(
        factorial(kn), multiplicity_product(zeta) * factorial(kn + 1 - len(zeta))
    )


def count_by_reduced_type(n: int, k: int, lam: Partition) -> int:
    """Number of partitions in NC_n^(k) with reduced type lam.

    lam = () means the block containing 1 is the whole ground set; weights
    n and above are impossible because that block is nonempty.
    """
    lam = as_partition(lam)
    if weight(lam) >= n:
        raise ValueError(
            f"reduced type weight must be < n = {n}, got {weight(lam)}"
        )
    kn = k * n
    return exact_div(
        factorial(kn) * (n - weight(lam)),
        n * multiplicity_product(lam) * factorial(kn - len(lam)),
    )


def format_blocks(blocks) -> str:
    """Literal: blocks joined by '/', elements by ',': "1,2,5,6/3,4/7,8"."""
    return "/".join(",".join(str(x) for x in b) for b in canonical_blocks(blocks))


def parse_blocks(text: str) -> Blocks:
    text = text.strip()
    if not text:
        return ()
    return canonical_blocks(
        tuple(int(x) for x in part.split(",")) for part in text.split("/")
    )
