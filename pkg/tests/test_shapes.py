from itertools import combinations

import pytest

from ncstrip.partitions import binomial, fuss_catalan, weight
from ncstrip.shapes import (
    RStrip,
    SkewShape,
    column_heights,
    enumerate_horizontal_strips,
    enumerate_r_strips,
    format_shape,
    format_strip,
    heights_from_path,
    is_r_strip,
    parse_shape,
    parse_strip,
    path_from_strip,
    rectangle,
    stretched_staircase,
    strip_from_path,
    strip_type,
)

SHAPE_32_1 = SkewShape((3, 2), (1,))


def test_shape_construction_and_literals():
    assert parse_shape("3,2/1") == SHAPE_32_1
    assert parse_shape("3,2/") == SkewShape((3, 2), ())
    assert format_shape(SHAPE_32_1) == "3,2/1"
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))
    with pytest.raises(ValueError):
        parse_shape("2,3/1")


def test_column_heights():
    assert column_heights(SHAPE_32_1) == {1: (0, 0), 2: (0, 1), 3: (1, 1)}
    assert column_heights(rectangle(2, 1))[1] == (0, 1)
    assert column_heights(stretched_staircase(1, 2)) == {1: (0, 1)}


def test_family_shapes():
    assert stretched_staircase(2, 1) == SkewShape((2, 2), (1,))
    assert stretched_staircase(3, 2) == SkewShape((3,) * 6, (2, 2, 1, 1))
    assert rectangle(2, 2) == SkewShape((2, 2, 2, 2), ())


def test_strip_census_for_skew_32_1():
    strips = enumerate_r_strips(SHAPE_32_1)
    assert len(strips) == 8
    census = {}
    for s in strips:
        census[strip_type(s)] = census.get(strip_type(s), 0) + 1
    assert census == {(2, 1): 2, (2,): 2, (1, 1): 1, (1,): 2, (): 1}


def test_r_strip_counts_for_families():
    assert len(enumerate_r_strips(stretched_staircase(2, 1))) == 5
    assert len(enumerate_r_strips(rectangle(2, 1))) == 6
    for n, k in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (3, 2)]:
        if k * (n + 1) <= 12:
            strips = enumerate_r_strips(stretched_staircase(n, k))
            assert len(strips) == fuss_catalan(n + 1, k)
        if (k + 1) * n <= 16:
            strips = enumerate_r_strips(rectangle(n, k))
            assert len(strips) == binomial((k + 1) * n, n)
    # largest rectangle cases at the (k+1)n <= 16 bound
    assert len(enumerate_r_strips(rectangle(4, 3))) == binomial(16, 4)
    assert len(enumerate_r_strips(rectangle(8, 1))) == binomial(16, 8)


def test_is_r_strip_examples():
    assert is_r_strip(SHAPE_32_1, [])
    assert not is_r_strip(SHAPE_32_1, [(1, 0)])
    assert is_r_strip(SHAPE_32_1, [(1, 0), (2, 0)])
    # two boxes in one column / decreasing heights / outside the shape
    assert not is_r_strip(SHAPE_32_1, [(2, 0), (2, 1)])
    assert not is_r_strip(rectangle(2, 2), [(1, 1), (2, 0)])
    assert not is_r_strip(SHAPE_32_1, [(3, 0)])


def test_strip_type_examples():
    assert strip_type(RStrip(SHAPE_32_1, ())) == ()
    assert strip_type(RStrip(SHAPE_32_1, ((1, 0), (2, 0), (3, 1)))) == (2, 1)
    assert strip_type(RStrip(SHAPE_32_1, ((1, 0), (2, 1), (3, 1)))) == (2, 1)
    assert strip_type(RStrip(SHAPE_32_1, ((2, 0), (3, 1)))) == (1, 1)
    assert strip_type(RStrip(rectangle(3, 1), ((1, 0), (2, 0), (3, 0)))) == (3,)


def test_path_strip_correspondence_on_32_1():
    # lower boundary path carries no boxes; upper boundary carries the
    # maximal strip of type (2,1)
    assert strip_from_path(SHAPE_32_1, "EENEN").boxes == ()
    assert strip_type(strip_from_path(SHAPE_32_1, "NENEE")) == (2, 1)
    with pytest.raises(ValueError):
        strip_from_path(SHAPE_32_1, "NNEEE")  # leaves the shape
    with pytest.raises(ValueError):
        heights_from_path(SHAPE_32_1, "EEN")


TEST_SHAPES = [
    SHAPE_32_1,
    SkewShape((2, 2), (1,)),
    SkewShape((2, 1), (1,)),
    SkewShape((3, 3, 3), (2, 1)),
    SkewShape((4, 2, 1), (1,)),
    SkewShape((2, 2, 1, 1), (1, 1)),
    rectangle(2, 2),
    rectangle(3, 1),
    stretched_staircase(2, 2),
    stretched_staircase(3, 1),
    stretched_staircase(1, 3),
]


@pytest.mark.parametrize("shape", TEST_SHAPES, ids=format_shape)
def test_path_characterization_equals_definition(shape):
    """Path-derived strips = definition-checked box subsets, exhaustively."""
    assert shape.box_count() <= 12
    strips = enumerate_r_strips(shape)
    from_paths = {s.boxes for s in strips}
    assert len(from_paths) == len(strips)
    boxes = shape.boxes()
    from_definition = {
        tuple(sorted(sub))
        for r in range(len(boxes) + 1)
        for sub in combinations(boxes, r)
        if is_r_strip(shape, sub)
    }
    assert from_paths == from_definition


@pytest.mark.parametrize("shape", TEST_SHAPES, ids=format_shape)
def test_path_strip_round_trip(shape):
    for strip in enumerate_r_strips(shape):
        word = path_from_strip(strip)
        assert strip_from_path(shape, word) == strip
        t = strip_type(strip)
        assert all(t[i] >= t[i + 1] for i in range(len(t) - 1))
        assert weight(t) == len(strip.boxes)


def test_horizontal_strips():
    staircase3 = stretched_staircase(3, 1)
    assert len(enumerate_horizontal_strips(staircase3)) == 5
    assert enumerate_horizontal_strips(rectangle(1, 1)) == [(0,)]
    assert enumerate_horizontal_strips(SkewShape((1, 1), ())) == [(0,), (1,)]
    # brute force oracle for the rectangle: weakly increasing pairs of heights
    brute = [
        (h1, h2)
        for h1 in range(4)
        for h2 in range(4)
        if h1 <= h2
    ]
    assert enumerate_horizontal_strips(rectangle(2, 2)) == sorted(brute)
    assert len(enumerate_horizontal_strips(SHAPE_32_1)) == 2
    with pytest.raises(ValueError):
        enumerate_horizontal_strips(SkewShape((3, 1), (2,)))  # empty column 2


def test_strip_literals():
    strip = RStrip(SHAPE_32_1, ((2, 0), (3, 1)))
    assert format_strip(strip) == "-,0,1"
    assert parse_strip(SHAPE_32_1, "-,0,1") == strip
    with pytest.raises(ValueError):
        parse_strip(SHAPE_32_1, "-,0")
    with pytest.raises(ValueError):
        parse_strip(SHAPE_32_1, "0,-,-")  # not right-aligned


def test_disconnected_column_support_is_rejected():
    with pytest.raises(ValueError):
        enumerate_r_strips(SkewShape((3, 1), (2,)))
