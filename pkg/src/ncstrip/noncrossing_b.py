"""Signed (type B) noncrossing partitions of {-m..-1, 1..m} with m = kn.

Polygon convention: the 2m-gon's positions 1..2m carry the labels
1, 2, ..., m, -1, -2, ..., -m clockwise, so pos(v) = v for v > 0 and
pos(-j) = m + j.  Crossing is tested on positions.  The element order used
for canonical listings is -1 < -2 < ... < -m < 1 < 2 < ... < m; blocks are
listed clockwise starting from their minimal element in that order.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .partitions import (
    Partition,
    as_partition,
    exact_div,
    factorial,
    multiplicity_product,
    weight,
)
from .noncrossing_a import blocks_noncrossing, noncrossing_partitions_of_seq

SignedBlocks = tuple[tuple[int, ...], ...]


def position(v: int, m: int) -> int:
    if v == 0 or abs(v) > m:
        raise ValueError(f"label {v} outside the signed ground set of size {m}")
    return v if v > 0 else m - v


def label_at(pos: int, m: int) -> int:
    if not 1 <= pos <= 2 * m:
        raise ValueError(f"position {pos} outside 1..{2 * m}")
    return pos if pos <= m else -(pos - m)


def element_key(v: int) -> tuple[int, int]:
    """Sort key for -1 < -2 < ... < -m < 1 < 2 < ... < m."""
    return (0, -v) if v < 0 else (1, v)


def canonical_blocks_b(blocks: Iterable[Iterable[int]], m: int) -> SignedBlocks:
    """Blocks sorted by minimal element, each listed clockwise from it."""
    out = []
    for b in blocks:
        b = list(b)
        start = min(b, key=element_key)
        p0 = position(start, m)
        out.append(tuple(sorted(b, key=lambda v: (position(v, m) - p0) % (2 * m))))
    return tuple(sorted(out, key=lambda b: element_key(b[0])))


def validate_signed_partition(blocks, m: int) -> SignedBlocks:
    blocks = canonical_blocks_b(blocks, m)
    seen = sorted(x for b in blocks for x in b)
    expect = sorted(set(range(-m, 0)) | set(range(1, m + 1)))
    if seen != expect:
        raise ValueError(f"blocks do not partition the signed set [-{m}..{m}]")
    return blocks


def is_invariant(blocks) -> bool:
    sets = {frozenset(b) for b in blocks}
    return all(frozenset(-x for x in b) in sets for b in sets)


def is_noncrossing_b(blocks, m: int | None = None) -> bool:
    """Antipodally invariant and circularly noncrossing (tested on positions)."""
    blocks = tuple(tuple(b) for b in blocks)
    if m is None:
        m = max((abs(x) for b in blocks for x in b), default=0)
    if not is_invariant(blocks):
        return False
    pos_blocks = [[position(v, m) for v in b] for b in blocks]
    return blocks_noncrossing(pos_blocks)


def antipodal_block(blocks) -> tuple[int, ...] | None:
    """The unique self-negating block, or None."""
    found = None
    for b in blocks:
        if set(b) == {-x for x in b}:
            if found is not None:
                raise ValueError("more than one antipodal block")
            found = tuple(sorted(b))
    return found


def validate_nc_b(blocks, n: int, k: int) -> SignedBlocks:
    m = k * n
    blocks = validate_signed_partition(blocks, m)
    if not is_invariant(blocks):
        raise ValueError("partition is not invariant under negation")
    if not is_noncrossing_b(blocks, m):
        raise ValueError("partition is crossing on the polygon")
    for b in blocks:
        if len(b) % k:
            raise ValueError(f"block size {len(b)} is not divisible by {k}")
    return blocks


def type_b(blocks, k: int = 1) -> Partition:
    """Sorted |B|/k over one block per {B, -B} orbit; antipodal block dropped."""
    anti = antipodal_block(blocks)
    sizes = []
    seen = set()
    for b in blocks:
        key = frozenset(b)
        if anti is not None and key == frozenset(anti):
            continue
        mirror = frozenset(-x for x in b)
        if mirror in seen:
            continue
        seen.add(key)
        if len(b) % k:
            raise ValueError(f"block size {len(b)} is not divisible by {k}")
        sizes.append(len(b) // k)
    return tuple(sorted(sizes, reverse=True))


def _mirror_pos(p: int, m: int) -> int:
    return p + m if p <= m else p - m


def enumerate_nc_b(n: int, k: int) -> list[SignedBlocks]:
    """All of NC_n^{B,(k)}, built directly (not via any bijection).

    Partitions with an antipodal block: choose the block's positive-half
    position set, then fill half of the sectors it cuts out and mirror them.
    Partitions without one: some diameter of the 2m-gon separates the blocks
    from their mirrors; cut there, fill one half, mirror, and deduplicate.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    m = k * n
    if m == 0:
        return [()]
    results: set[SignedBlocks] = set()

    def to_labels(pos_blocks) -> SignedBlocks:
        return canonical_blocks_b(
            [tuple(label_at(p, m) for p in b) for b in pos_blocks], m
        )

    # with an antipodal block
    for z in range(1, m + 1):
        if (2 * z) % k:
            continue
        for zplus in itertools.combinations(range(1, m + 1), z):
            q = list(zplus) + [p + m for p in zplus]
            sectors = []
            for i in range(z):
                a, b = q[i], q[i + 1] if i + 1 < 2 * z else q[0] + 2 * m
                sectors.append(list(range(a + 1, b)))
            fillings = [
                list(noncrossing_partitions_of_seq(sec, k)) for sec in sectors
            ]
            if not all(fillings):
                continue
            for choice in itertools.product(*fillings):
                pos_blocks = [q]
                for part in choice:
                    for blk in part:
                        pos_blocks.append(list(blk))
                        pos_blocks.append([_mirror_pos(p, m) for p in blk])
                results.add(to_labels(pos_blocks))

    # without an antipodal block: cut along each diameter
    for g in range(m):
        arc = list(range(g + 1, g + m + 1))
        for part in noncrossing_partitions_of_seq(arc, k):
            pos_blocks = []
            for blk in part:
                wrapped = [p if p <= 2 * m else p - 2 * m for p in blk]
                pos_blocks.append(wrapped)
                pos_blocks.append([_mirror_pos(p, m) for p in wrapped])
            results.add(to_labels(pos_blocks))

    return sorted(results)


def count_by_type_b(n: int, k: int, lam: Partition) -> int:
    """Number of partitions in NC_n^{B,(k)} with type lam (weight <= n)."""
    lam = as_partition(lam)
    if weight(lam) > n:
        raise ValueError(f"type weight must be <= n = {n}, got {weight(lam)}")
    kn = k * n
    return exact_div(
        factorial(kn), multiplicity_product(lam) * factorial(kn - len(lam))
    )


def format_blocks_b(blocks, m: int | None = None) -> str:
    if m is None:
        m = max((abs(x) for b in blocks for x in b), default=0)
    return "/".join(
        ",".join(str(x) for x in b) for b in canonical_blocks_b(blocks, m)
    )


def parse_blocks_b(text: str) -> SignedBlocks:
    """Literal with negative elements: "-1,-2,12/-3,-7,11/...".

    Negation closure is validated downstream, never inferred here.
    """
    text = text.strip()
    if not text:
        return ()
    blocks = tuple(
        tuple(int(x) for x in part.split(",")) for part in text.split("/")
    )
    m = max(abs(x) for b in blocks for x in b)
    return canonical_blocks_b(blocks, m)
