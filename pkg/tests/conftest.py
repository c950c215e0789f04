"""Shared graphs and independent oracles.

The type-A oracles work in the symmetric-group permutation model (adjacent
transpositions, length = inversion count), which shares no code with the
matrix machinery under test.  Layer-size oracles come from the Poincaré
polynomial, i.e. the product of q-integers over the degrees.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import settings

from coxbraid import CoxeterGraph

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


def path_graph(n: int) -> CoxeterGraph:
    vertices = tuple(str(k + 1) for k in range(n))
    edges = frozenset((vertices[k], vertices[k + 1]) for k in range(n - 1))
    return CoxeterGraph(vertices, edges)


A2 = path_graph(2)
A3 = path_graph(3)
A4 = path_graph(4)
D4 = CoxeterGraph(("1", "2", "3", "4"), frozenset({("1", "2"), ("2", "3"), ("2", "4")}))
TRIANGLE = CoxeterGraph(("1", "2", "3"), frozenset({("1", "2"), ("2", "3"), ("1", "3")}))


@pytest.fixture
def a2() -> CoxeterGraph:
    return A2


@pytest.fixture
def a3() -> CoxeterGraph:
    return A3


@pytest.fixture
def a4() -> CoxeterGraph:
    return A4


@pytest.fixture
def d4() -> CoxeterGraph:
    return D4


@pytest.fixture
def triangle() -> CoxeterGraph:
    return TRIANGLE


# ---------------------------------------------------------------------------
# Permutation oracle for type A: letter "i" acts on one-line notation by
# swapping positions i-1 and i.


def perm_of_word(word: tuple[str, ...], n: int) -> tuple[int, ...]:
    line = list(range(n))
    for letter in word:
        i = int(letter) - 1
        line[i], line[i + 1] = line[i + 1], line[i]
    return tuple(line)


def inversion_count(line: tuple[int, ...]) -> int:
    return sum(
        1
        for i in range(len(line))
        for j in range(i + 1, len(line))
        if line[i] > line[j]
    )


def perm_reduced_words(n: int) -> dict[tuple[int, ...], set[tuple[str, ...]]]:
    """All reduced words of the symmetric group on n letters, grouped by
    permutation.  Depth-first extension prunes non-reduced prefixes, which
    is exact because a word with a non-reduced prefix is never reduced.
    """
    letters = [str(k + 1) for k in range(n - 1)]
    identity = tuple(range(n))
    out: dict[tuple[int, ...], set[tuple[str, ...]]] = {identity: {()}}
    frontier: list[tuple[tuple[str, ...], tuple[int, ...]]] = [((), identity)]
    while frontier:
        nxt = []
        for word, line in frontier:
            for letter in letters:
                i = int(letter) - 1
                if line[i] < line[i + 1]:  # length goes up: still reduced
                    swapped = list(line)
                    swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                    new = (word + (letter,), tuple(swapped))
                    out.setdefault(new[1], set()).add(new[0])
                    nxt.append(new)
        frontier = nxt
    return out


# ---------------------------------------------------------------------------
# Layer-size oracle from the Poincaré polynomial.


def poincare_layers(degrees: tuple[int, ...]) -> list[int]:
    poly = [1]
    for d in degrees:
        factor = [1] * d
        out = [0] * (len(poly) + d - 1)
        for i, a in enumerate(poly):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        poly = out
    return poly


def all_words(graph: CoxeterGraph, max_len: int):
    for length in range(max_len + 1):
        yield from itertools.product(graph.vertices, repeat=length)
