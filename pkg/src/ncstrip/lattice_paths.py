"""Fuss-Catalan and Fuss binomial lattice paths and their ascent statistics.

Paths are E/N words with E = (1,0) and N = (0,1).  A Fuss-Catalan path of
parameters (n, k) runs from (0,0) to (n, kn) staying in 0 <= y <= kx (so it
must start with E); a Fuss binomial path has the same endpoints and no
region constraint.
"""

from __future__ import annotations

from typing import Iterator

from .partitions import Partition


def validate_word(word: str) -> None:
    bad = set(word) - {"E", "N"}
    if bad:
        raise ValueError(f"path word must be over {{E, N}}, found {sorted(bad)}")


def is_fuss_catalan(word: str, n: int, k: int) -> bool:
    if word.count("E") != n or word.count("N") != k * n:
        return False
    x = y = 0
    for step in word:
        if step == "E":
            x += 1
        else:
            y += 1
            if y > k * x:
                return False
    return True


def validate_fuss_catalan(word: str, n: int, k: int) -> None:
    validate_word(word)
    if not is_fuss_catalan(word, n, k):
        raise ValueError(f"{word!r} is not a Fuss-Catalan path for n={n}, k={k}")


def is_fuss_binomial(word: str, n: int, k: int) -> bool:
    return word.count("E") == n and word.count("N") == k * n


def validate_fuss_binomial(word: str, n: int, k: int) -> None:
    validate_word(word)
    if not is_fuss_binomial(word, n, k):
        raise ValueError(
            f"{word!r} does not have {n} E steps and {k * n} N steps"
        )


def enumerate_fuss_catalan(n: int, k: int) -> Iterator[str]:
    """All paths of D_n^(k) in lexicographic order with E < N."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")

    def rec(prefix: list[str], e_left: int, n_left: int, x: int, y: int):
        if not e_left and not n_left:
            yield "".join(prefix)
            return
        if e_left:
            prefix.append("E")
            yield from rec(prefix, e_left - 1, n_left, x + 1, y)
            prefix.pop()
        if n_left and y + 1 <= k * x:
            prefix.append("N")
            yield from rec(prefix, e_left, n_left - 1, x, y + 1)
            prefix.pop()

    yield from rec([], n, k * n, 0, 0)


def enumerate_fuss_binomial(n: int, k: int) -> Iterator[str]:
    """All words with n E's and kn N's in lexicographic order with E < N."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")

    def rec(prefix: list[str], e_left: int, n_left: int):
        if not e_left and not n_left:
            yield "".join(prefix)
            return
        if e_left:
            prefix.append("E")
            yield from rec(prefix, e_left - 1, n_left)
            prefix.pop()
        if n_left:
            prefix.append("N")
            yield from rec(prefix, e_left, n_left - 1)
            prefix.pop()

    yield from rec([], n, k * n)


def ascents(word: str) -> list[tuple[int, int]]:
    """Maximal E-runs left to right as (y-coordinate, length) pairs."""
    validate_word(word)
    out = []
    y = run = 0
    for step in word:
        if step == "E":
            run += 1
        else:
            if run:
                out.append((y, run))
                run = 0
            y += 1
    if run:
        out.append((y, run))
    return out


def fc_type(word: str) -> Partition:
    """Sorted ascent lengths."""
    return tuple(sorted((ln for _, ln in ascents(word)), reverse=True))


def fc_reduced_type(word: str) -> Partition:
    """Sorted ascent lengths, excluding the ascent containing the first step."""
    runs = ascents(word)
    return tuple(sorted((ln for _, ln in runs[1:]), reverse=True))


def fb_type(word: str) -> Partition:
    """Sorted lengths of the ascents not lying on y = 0."""
    return tuple(
        sorted((ln for y, ln in ascents(word) if y > 0), reverse=True)
    )
