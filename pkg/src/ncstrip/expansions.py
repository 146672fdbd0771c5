"""Formal expansions in the complete homogeneous basis.

An expansion is a dict mapping partitions (tuples) to positive integer
coefficients; the empty partition () indexes the constant term.  The
variables are never evaluated, so a dict is the whole story.
"""

from __future__ import annotations

from collections import Counter

from .noncrossing_a import count_by_reduced_type
from .noncrossing_b import count_by_type_b
from .partitions import (
    Partition,
    exact_div,
    factorial,
    multiplicity_product,
    partition_sort_key,
    partitions_of,
    partitions_with_weight_at_most,
)
from .shapes import SkewShape, iter_strip_heights, strip_type_of_heights

HExpansion = dict[Partition, int]


def expand_skew(shape: SkewShape) -> HExpansion:
    """Coefficient of h_lam = number of r-strips of type lam in the shape."""
    census: Counter[Partition] = Counter()
    for heights in iter_strip_heights(shape):
        census[strip_type_of_heights(shape, heights)] += 1
    return dict(census)


def fuss_a_expansion_formula(n: int, k: int) -> HExpansion:
    """Closed form for the stretched staircase expansion.

    The h_lam coefficient is the number of k-divisible noncrossing
    partitions of [k(n+1)] with reduced type lam.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return {
        lam: count_by_reduced_type(n + 1, k, lam)
        for lam in partitions_with_weight_at_most(n)
    }


def fuss_b_expansion_formula(n: int, k: int) -> HExpansion:
    """Closed form for the rectangle expansion.

    The h_lam coefficient is the number of k-divisible signed noncrossing
    partitions of [kn]^+- with type lam.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return {
        lam: count_by_type_b(n, k, lam)
        for lam in partitions_with_weight_at_most(n)
    }


def parking_expansion(n: int) -> HExpansion:
    """The parking function symmetric function: support is partitions of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return {
        lam: exact_div(
            factorial(n),
            multiplicity_product(lam) * factorial(n + 1 - len(lam)),
        )
        for lam in partitions_of(n)
    }


def top_homogeneous_part(e: HExpansion, d: int) -> HExpansion:
    return {lam: c for lam, c in e.items() if sum(lam) == d}


def expansion_diff(
    a: HExpansion, b: HExpansion
) -> list[tuple[Partition, int, int]]:
    """Every lam whose coefficients differ, as (lam, a_coeff, b_coeff)."""
    out = []
    for lam in sorted(set(a) | set(b), key=partition_sort_key):
        ca, cb = a.get(lam, 0), b.get(lam, 0)
        if ca != cb:
            out.append((lam, ca, cb))
    return out


def h_expansions_equal(a: HExpansion, b: HExpansion) -> tuple[bool, list]:
    diffs = expansion_diff(a, b)
    return (not diffs, diffs)


def expansion_items(e: HExpansion) -> list[tuple[Partition, int]]:
    """(partition, coefficient) pairs in canonical partition order."""
    return sorted(e.items(), key=lambda kv: partition_sort_key(kv[0]))
