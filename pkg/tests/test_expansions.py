from collections import Counter

import pytest

from ncstrip.expansions import (
    expand_skew,
    expansion_items,
    fuss_a_expansion_formula,
    fuss_b_expansion_formula,
    h_expansions_equal,
    parking_expansion,
    top_homogeneous_part,
)
from ncstrip.noncrossing_a import enumerate_k_divisible, reduced_type_a
from ncstrip.noncrossing_b import enumerate_nc_b, type_b
from ncstrip.parking import enumerate_primitive, pf_type
from ncstrip.partitions import binomial, catalan, fuss_catalan
from ncstrip.shapes import parse_shape, rectangle, stretched_staircase


def test_skew_expansion_golden_case():
    assert expand_skew(parse_shape("3,2/1")) == {
        (2, 1): 2,
        (2,): 2,
        (1, 1): 1,
        (1,): 2,
        (): 1,
    }


def test_skew_expansion_small_cases():
    assert expand_skew(rectangle(1, 1)) == {(1,): 1, (): 1}
    assert expand_skew(stretched_staircase(2, 1)) == {
        (2,): 1,
        (1, 1): 1,
        (1,): 2,
        (): 1,
    }
    assert expand_skew(parse_shape("1,1/")) == {(1,): 2, (): 1}


def test_fuss_a_formula_values():
    assert fuss_a_expansion_formula(2, 1) == {
        (): 1,
        (1,): 2,
        (2,): 1,
        (1, 1): 1,
    }
    assert fuss_a_expansion_formula(1, 2) == {(): 1, (1,): 2}
    for n, k in [(1, 1), (2, 1), (3, 2), (4, 1)]:
        assert fuss_a_expansion_formula(n, k)[()] == 1


def test_fuss_b_formula_values():
    assert fuss_b_expansion_formula(2, 1) == {
        (): 1,
        (1,): 2,
        (2,): 2,
        (1, 1): 1,
    }
    assert fuss_b_expansion_formula(1, 1) == {(): 1, (1,): 1}
    assert fuss_b_expansion_formula(2, 2) == {
        (): 1,
        (1,): 4,
        (2,): 4,
        (1, 1): 6,
    }
    for n, k in [(1, 1), (2, 2), (3, 1)]:
        assert fuss_b_expansion_formula(n, k)[()] == 1


def test_parking_expansion_values():
    assert parking_expansion(1) == {(1,): 1}
    assert parking_expansion(3) == {(3,): 1, (2, 1): 3, (1, 1, 1): 1}
    assert sum(parking_expansion(3).values()) == catalan(3)
    for n in range(1, 8):
        assert sum(parking_expansion(n).values()) == catalan(n)


def test_top_homogeneous_part():
    e = expand_skew(parse_shape("3,2/1"))
    assert top_homogeneous_part(e, 3) == {(2, 1): 2}
    assert top_homogeneous_part(e, 9) == {}
    staircase = expand_skew(stretched_staircase(3, 1))
    assert top_homogeneous_part(staircase, 3) == parking_expansion(3)


@pytest.mark.parametrize("n", range(1, 8))
def test_parking_expansion_is_staircase_top_part(n):
    staircase = expand_skew(stretched_staircase(n, 1))
    assert top_homogeneous_part(staircase, n) == parking_expansion(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_parking_expansion_matches_primitive_census(n):
    census = Counter(pf_type(p) for p in enumerate_primitive(n))
    assert dict(census) == parking_expansion(n)


def test_equality_and_diff_report():
    a = {(1,): 2, (): 1}
    equal, diffs = h_expansions_equal(a, dict(a))
    assert equal and diffs == []
    equal, diffs = h_expansions_equal(a, {(1,): 3, (2,): 1})
    assert not equal
    assert diffs == [((), 1, 0), ((1,), 2, 3), ((2,), 0, 1)]


def test_equality_theorem_instances():
    eq, _ = h_expansions_equal(
        expand_skew(stretched_staircase(2, 1)), fuss_a_expansion_formula(2, 1)
    )
    assert eq
    eq, _ = h_expansions_equal(
        expand_skew(rectangle(2, 2)), fuss_b_expansion_formula(2, 2)
    )
    assert eq


@pytest.mark.parametrize(
    "n,k", [(n, k) for k in (1, 2, 3) for n in range(1, 8) if k * (n + 1) <= 10]
)
def test_staircase_three_way_equality(n, k):
    by_enum = expand_skew(stretched_staircase(n, k))
    by_formula = fuss_a_expansion_formula(n, k)
    census = Counter(
        reduced_type_a(b, k) for b in enumerate_k_divisible(n + 1, k)
    )
    assert by_enum == by_formula == dict(census)
    assert sum(by_formula.values()) == fuss_catalan(n + 1, k)
    if k == 1:
        assert sum(by_formula.values()) == catalan(n + 1)


@pytest.mark.parametrize(
    "n,k", [(n, k) for k in (1, 2, 3) for n in range(1, 8) if (k + 1) * n <= 12]
)
def test_rectangle_three_way_equality(n, k):
    by_enum = expand_skew(rectangle(n, k))
    by_formula = fuss_b_expansion_formula(n, k)
    census = Counter(type_b(b, k) for b in enumerate_nc_b(n, k))
    assert by_enum == by_formula == dict(census)
    assert sum(by_formula.values()) == binomial((k + 1) * n, n)


def test_expansion_items_canonical_order():
    items = expansion_items(expand_skew(parse_shape("3,2/1")))
    assert items == [
        ((), 1),
        ((1,), 2),
        ((2,), 2),
        ((1, 1), 1),
        ((2, 1), 2),
    ]
