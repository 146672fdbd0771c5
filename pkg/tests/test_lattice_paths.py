import pytest
from hypothesis import given, strategies as st

from ncstrip.lattice_paths import (
    ascents,
    enumerate_fuss_binomial,
    enumerate_fuss_catalan,
    fb_type,
    fc_reduced_type,
    fc_type,
    is_fuss_catalan,
    validate_fuss_binomial,
    validate_fuss_catalan,
)
from ncstrip.partitions import binomial, fuss_catalan, weight

TYPE_A_EXAMPLE_WORD = "ENEENNNNENNNEENNNN"  # the worked type A example, 6 E / 12 N


def test_enumerate_fuss_catalan_counts_and_order():
    assert list(enumerate_fuss_catalan(0, 1)) == [""]
    paths = list(enumerate_fuss_catalan(3, 1))
    assert len(paths) == 5
    assert paths == sorted(paths)  # lexicographic, E < N
    assert paths[0] == "EEENNN"
    # cross-check by filtering all words
    allwords = list(enumerate_fuss_binomial(3, 1))
    assert len(allwords) == binomial(6, 3)
    assert paths == [w for w in allwords if is_fuss_catalan(w, 3, 1)]


@pytest.mark.parametrize("n,k", [(n, k) for k in (1, 2, 3) for n in range(7) if k * n <= 12])
def test_fuss_catalan_paths_valid(n, k):
    count = 0
    for w in enumerate_fuss_catalan(n, k):
        count += 1
        if n:
            assert w[0] == "E"
        x = y = 0
        for c in w:
            if c == "E":
                x += 1
            else:
                y += 1
            assert 0 <= y <= k * x
        assert weight(fc_type(w)) == n
        assert weight(fc_reduced_type(w)) <= max(n - 1, 0)
    assert count == fuss_catalan(n, k)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (4, 3), (3, 2), (2, 4)])
def test_fuss_binomial_counts(n, k):
    paths = list(enumerate_fuss_binomial(n, k))
    assert len(paths) == binomial((k + 1) * n, n)
    assert paths == sorted(paths)
    assert len(set(paths)) == len(paths)


def test_fuss_binomial_small():
    assert list(enumerate_fuss_binomial(1, 1)) == ["EN", "NE"]
    assert len(list(enumerate_fuss_binomial(2, 1))) == 6
    assert sum(1 for _ in enumerate_fuss_binomial(4, 3)) == 1820


def test_ascents():
    assert ascents("EEENNN") == [(0, 3)]
    assert ascents("ENEN") == [(0, 1), (1, 1)]
    assert [ln for _, ln in ascents(TYPE_A_EXAMPLE_WORD)] == [1, 2, 1, 2]


def test_worked_example_word_is_enumerated():
    assert TYPE_A_EXAMPLE_WORD in set(enumerate_fuss_catalan(6, 2))


def test_types():
    assert fc_type("EEENNN") == (3,)
    assert fc_reduced_type("EEENNN") == ()
    assert fc_type(TYPE_A_EXAMPLE_WORD) == (2, 2, 1, 1)
    assert fc_reduced_type(TYPE_A_EXAMPLE_WORD) == (2, 2, 1)
    assert fc_type("ENEN") == (1, 1)
    assert fc_reduced_type("ENEN") == (1,)
    assert fb_type("EENN") == ()
    assert fb_type("NNEE") == (2,)
    assert fb_type("ENEN") == (1,)


def test_fb_type_weight_equality_iff_starts_north():
    for w in enumerate_fuss_binomial(3, 1):
        if w.startswith("N"):
            assert weight(fb_type(w)) == 3
        else:
            assert weight(fb_type(w)) < 3


def test_validators():
    validate_fuss_catalan(TYPE_A_EXAMPLE_WORD, 6, 2)
    with pytest.raises(ValueError):
        validate_fuss_catalan("NE", 1, 1)
    with pytest.raises(ValueError):
        validate_fuss_catalan("EENN", 2, 2)
    with pytest.raises(ValueError):
        validate_fuss_binomial("EXN", 1, 1)
    validate_fuss_binomial("NE", 1, 1)


@given(st.integers(1, 5), st.integers(1, 3), st.data())
def test_random_binomial_word_types(n, k, data):
    # build a random word with the right step counts
    steps = ["E"] * n + ["N"] * (k * n)
    word = "".join(data.draw(st.permutations(steps)))
    validate_fuss_binomial(word, n, k)
    t = fb_type(word)
    assert weight(t) <= n
    assert all(t[i] >= t[i + 1] for i in range(len(t) - 1))
    assert sum(ln for _, ln in ascents(word)) == n
