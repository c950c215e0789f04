"""Root sequences, inversion sets and triples, contractibility, free braidedness."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from coxbraid import (
    NotReducedError,
    contractible_triple_count,
    contractible_triples,
    element_of,
    element_word,
    enumerate_elements,
    identity_element,
    inversion_set,
    inversion_triples,
    is_contractible,
    is_freely_braided,
    is_fully_commutative,
    make_triple,
    multiply_generator,
    reduced_words,
    root_sequence,
    roots_orthogonal,
    simple_root,
    triple_components,
    word_from_root_sequence,
    word_root_entries,
)

from conftest import D4


def test_root_sequence_a2_longest(a2):
    rs = root_sequence(a2, ("1", "2", "1"))
    assert rs.roots == ((1, 0), (1, 1), (0, 1))
    assert rs.source_word == ("1", "2", "1")


def test_root_sequence_a3(a3):
    rs = root_sequence(a3, ("2", "1", "3", "2"))
    assert rs.roots == ((0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1))


def test_root_sequence_single_letter(a3):
    assert root_sequence(a3, ("2",)).roots == ((0, 1, 0),)


def test_root_sequence_rejects_non_reduced(a2):
    with pytest.raises(NotReducedError):
        root_sequence(a2, ("1", "1"))
    with pytest.raises(NotReducedError):
        root_sequence(a2, ("1", "2", "1", "2"))


def test_word_from_root_sequence_examples(a2, a3):
    assert word_from_root_sequence(a2, [(1, 0), (1, 1), (0, 1)]) == ("1", "2", "1")
    assert word_from_root_sequence(a3, [(0, 1, 0)]) == ("2",)
    assert word_from_root_sequence(
        a3, [(0, 1, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)]
    ) == ("2", "1", "3", "2")


def test_word_from_root_sequence_not_realizable(a2):
    with pytest.raises(ValueError):
        word_from_root_sequence(a2, [(1, 1)])  # first entry not simple
    with pytest.raises(ValueError):
        word_from_root_sequence(a2, [(1, 0), (1, 0)])  # not simple after peeling


def test_root_sequence_round_trip_all_a3(a3):
    layers = enumerate_elements(a3, 6)
    for k in layers:
        for e in layers[k]:
            for word in reduced_words(a3, e):
                assert word_from_root_sequence(a3, root_sequence(a3, word)) == word


def test_inversion_set_examples(a2, a3):
    assert inversion_set(a2, identity_element(a2)) == frozenset()
    w0 = element_of(a2, ("1", "2", "1"))
    assert inversion_set(a2, w0) == frozenset({(1, 0), (0, 1), (1, 1)})
    e = element_of(a3, ("2", "1", "3", "2"))
    assert inversion_set(a3, e) == frozenset(root_sequence(a3, ("2", "1", "3", "2")).roots)


def test_inversion_set_size_is_length(d4):
    layers = enumerate_elements(d4, 6)
    for k in layers:
        for e in layers[k]:
            assert len(inversion_set(d4, e)) == e.length


def test_inversion_triples_examples(a2, a3):
    w0 = element_of(a2, ("1", "2", "1"))
    assert inversion_triples(a2, w0) == frozenset({make_triple((1, 0), (0, 1))})
    assert inversion_triples(a3, element_of(a3, ("2", "1", "3", "2"))) == frozenset()
    assert inversion_triples(a2, identity_element(a2)) == frozenset()


def test_triple_components(a2):
    t = make_triple((1, 0), (0, 1))
    a, b, total = triple_components(t)
    assert {a, b} == {(1, 0), (0, 1)}
    assert total == (1, 1)
    with pytest.raises(ValueError):
        triple_components(((1, 0), (0, 1), (2, 2)))


def test_is_contractible_examples(a2, a3):
    w0 = element_of(a2, ("1", "2", "1"))
    t = make_triple((1, 0), (0, 1))
    assert is_contractible(a2, w0, t)
    e = element_of(a3, ("2", "1", "3", "2", "3"))
    for t in inversion_triples(a3, e):
        assert is_contractible(a3, e, t)
    with pytest.raises(ValueError):
        is_contractible(a2, w0, ((1, 0), (0, 1), (2, 1)))


def test_contractible_triple_count_examples(a2, a3):
    assert contractible_triple_count(a3, element_of(a3, ("2", "1", "3", "2"))) == 0
    assert contractible_triple_count(a3, element_of(a3, ("2", "1", "3", "2", "3"))) == 2
    assert contractible_triple_count(a2, element_of(a2, ("1", "2", "1"))) == 1


def test_is_freely_braided_examples(a2, a3):
    assert is_freely_braided(a2, element_of(a2, ("1", "2", "1")))
    assert not is_freely_braided(a3, element_of(a3, ("2", "1", "3", "2", "3")))
    layers = enumerate_elements(a3, 6)
    for k in layers:
        for e in layers[k]:
            if is_fully_commutative(a3, e):
                assert is_freely_braided(a3, e)


def test_longest_a3_element_not_freely_braided(a3):
    # All four inversion triples of the longest element are contractible and
    # overlap, so the class count 8 sits strictly under 2^4.
    w0 = element_of(a3, ("1", "2", "1", "3", "2", "1"))
    assert contractible_triple_count(a3, w0) == 4
    assert not is_freely_braided(a3, w0)


# ---------------------------------------------------------------------------
# Move laws on root sequences (exhaustive on A_2 and bounded D_4; the longer
# A_3 sweep lives in the acceptance suite)


def _swap(entries, i, j):
    out = list(entries)
    out[i], out[j] = out[j], out[i]
    return out


@pytest.mark.parametrize("graph_name,max_len", [("a2", 3), ("d4", 5)])
def test_move_laws_on_root_sequences(graph_name, max_len, request):
    g = request.getfixturevalue(graph_name)
    layers = enumerate_elements(g, max_len)
    for k in layers:
        for e in layers[k]:
            for word in reduced_words(g, e):
                entries = word_root_entries(g, word)
                n = len(word)
                for p in range(n - 1):
                    a, b = word[p], word[p + 1]
                    if a != b and not g.are_adjacent(a, b):
                        s = n - p - 2
                        other = word_root_entries(g, word[:p] + (b, a) + word[p + 2 :])
                        assert list(other) == _swap(entries, s, s + 1)
                        assert roots_orthogonal(g, entries[s], entries[s + 1])
                for s in range(n - 1):
                    if roots_orthogonal(g, entries[s], entries[s + 1]):
                        p = n - s - 2
                        assert g.m(word[p], word[p + 1]) == 2
                for p in range(n - 2):
                    a, b = word[p], word[p + 1]
                    if word[p + 2] == a and a != b and g.are_adjacent(a, b):
                        s = n - p - 3
                        assert tuple(
                            x + y for x, y in zip(entries[s], entries[s + 2])
                        ) == entries[s + 1]
                        other = word_root_entries(g, word[:p] + (b, a, b) + word[p + 3 :])
                        assert list(other) == _swap(entries, s, s + 2)
                for s in range(n - 2):
                    if tuple(x + y for x, y in zip(entries[s], entries[s + 2])) == entries[s + 1]:
                        p = n - s - 3
                        assert word[p] == word[p + 2] != word[p + 1]
                        assert g.m(word[p], word[p + 1]) == 3


@pytest.mark.parametrize("graph_name,max_len", [("a3", 6), ("d4", 12)])
def test_inversion_set_word_independent(graph_name, max_len, request):
    g = request.getfixturevalue(graph_name)
    layers = enumerate_elements(g, max_len)
    for k in layers:
        for e in layers[k]:
            expected = inversion_set(g, e)
            for word in reduced_words(g, e):
                assert frozenset(word_root_entries(g, word)) == expected


@pytest.mark.parametrize("graph_name,max_len", [("a3", 6), ("a4", 6)])
def test_consecutive_triples_have_sum_in_the_middle(graph_name, max_len, request):
    g = request.getfixturevalue(graph_name)
    layers = enumerate_elements(g, max_len)
    for k in layers:
        for e in layers[k]:
            triples = inversion_triples(g, e)
            if not triples:
                continue
            for word in reduced_words(g, e):
                entries = word_root_entries(g, word)
                for s in range(len(entries) - 2):
                    window = tuple(sorted(entries[s : s + 3]))
                    if window in triples:
                        a, b, c = entries[s], entries[s + 1], entries[s + 2]
                        assert tuple(x + y for x, y in zip(a, c)) == b


def test_overlapping_contractible_triples_share_one_root(a3):
    e = element_of(a3, ("2", "1", "3", "2", "3"))
    triples = sorted(contractible_triples(a3, e))
    assert len(triples) == 2
    shared = set(triples[0]) & set(triples[1])
    assert shared == {simple_root(a3, "3")}


@given(word=st.lists(st.sampled_from(D4.vertices), max_size=9).map(tuple))
def test_round_trip_random_d4(word):
    e = element_of(D4, word)
    witness = element_word(D4, e)
    assert word_from_root_sequence(D4, root_sequence(D4, witness)) == witness


@given(word=st.lists(st.sampled_from(D4.vertices), max_size=9).map(tuple))
def test_up_step_prepends_alpha_random(word):
    # Root sequence of (word + i) is (alpha_i, reflected old sequence).
    e = element_of(D4, word)
    witness = element_word(D4, e)
    for v in D4.vertices:
        taller = multiply_generator(D4, e, v)
        if taller.length > e.length:
            extended = witness + (v,)
            entries = word_root_entries(D4, extended)
            assert entries[0] == simple_root(D4, v)
