"""Graphs, the form, reflections, elements and layered enumeration."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coxbraid import (
    BudgetExceededError,
    CoxeterGraph,
    DuplicateVertexError,
    MalformedGraphError,
    SelfLoopError,
    UnknownVertexError,
    coxeter_form,
    element_of,
    element_word,
    enumerate_elements,
    form_value,
    graph_to_json,
    height,
    identity_element,
    is_reduced,
    multiply_generator,
    parse_graph,
    reflect,
    simple_root,
    validate_root,
    word_root_entries,
)

from conftest import A3, D4, all_words, inversion_count, perm_of_word, poincare_layers


# ---------------------------------------------------------------------------
# Parsing


def test_parse_a2():
    g = parse_graph('{"vertices":["1","2"],"edges":[["1","2"]]}')
    assert g.vertices == ("1", "2")
    assert g.m("1", "2") == 3
    assert g.m("1", "1") == 1


def test_parse_a3_path():
    g = parse_graph('{"vertices":["1","2","3"],"edges":[["1","2"],["2","3"]]}')
    assert g.m("1", "3") == 2
    assert g.m("2", "3") == 3


def test_parse_self_loop():
    with pytest.raises(SelfLoopError):
        parse_graph('{"vertices":["1"],"edges":[["1","1"]]}')


def test_parse_duplicate_vertex():
    with pytest.raises(DuplicateVertexError):
        parse_graph('{"vertices":["1","1"],"edges":[]}')


def test_parse_unknown_edge_vertex():
    with pytest.raises(UnknownVertexError):
        parse_graph('{"vertices":["1","2"],"edges":[["1","3"]]}')


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1,2]",
        '{"vertices":"1","edges":[]}',
        '{"vertices":["1"],"edges":[["1"]]}',
        '{"vertices":[1],"edges":[]}',
        '{"vertices":["1"],"edges":"x"}',
    ],
)
def test_parse_malformed(text):
    with pytest.raises(MalformedGraphError):
        parse_graph(text)


def test_graph_json_round_trip(a3):
    assert parse_graph(graph_to_json(a3)) == a3
    # edge order in the document is irrelevant
    g = parse_graph('{"vertices":["1","2","3"],"edges":[["3","2"],["2","1"]]}')
    assert g == a3


# ---------------------------------------------------------------------------
# Form and reflections


def test_coxeter_form_values(a2, a3):
    assert coxeter_form(a2, "1", "1") == Fraction(1)
    assert coxeter_form(a3, "1", "3") == Fraction(0)
    assert coxeter_form(a2, "1", "2") == Fraction(-1, 2)
    with pytest.raises(UnknownVertexError):
        coxeter_form(a2, "1", "5")


def test_form_value_bilinear(a2):
    a1 = simple_root(a2, "1")
    a12 = (1, 1)
    assert form_value(a2, a1, a1) == 1
    assert form_value(a2, a1, a12) == Fraction(1, 2)
    assert form_value(a2, a12, a12) == 1


def test_reflect_examples(a2, a3):
    assert reflect(a2, "1", simple_root(a2, "1")) == (-1, 0)
    assert reflect(a2, "1", simple_root(a2, "2")) == (1, 1)
    assert reflect(a3, "1", simple_root(a3, "3")) == (0, 0, 1)
    with pytest.raises(UnknownVertexError):
        reflect(a2, "9", simple_root(a2, "1"))


def test_validate_root_rejects_mixed_signs(a2):
    with pytest.raises(ValueError):
        validate_root(a2, (1, -1))
    with pytest.raises(ValueError):
        validate_root(a2, (0, 0))
    with pytest.raises(ValueError):
        validate_root(a2, (1, 0, 0))


def test_height():
    assert height((1, 0)) == 1
    assert height((1, 1)) == 2
    assert height((-1, -1, -1)) == -3


# ---------------------------------------------------------------------------
# Elements


def test_element_of_empty_word(a2):
    e = element_of(a2, ())
    assert e == identity_element(a2)
    assert e.length == 0


def test_element_of_braid_relation(a2):
    e1 = element_of(a2, ("1", "2", "1"))
    e2 = element_of(a2, ("2", "1", "2"))
    assert e1 == e2
    assert e1.length == 3
    # longest element of the rank-2 group: negates and swaps the simple roots
    assert e1.columns == ((0, -1), (-1, 0))


def test_element_of_involution(a2):
    assert element_of(a2, ("1", "1")) == identity_element(a2)
    assert element_of(a2, ("1", "1")).length == 0


def test_element_of_unknown_letter(a2):
    with pytest.raises(UnknownVertexError):
        element_of(a2, ("1", "7"))


def test_rows_transpose(a3):
    e = element_of(a3, ("2", "1", "3", "2"))
    rows = e.rows()
    for i in range(3):
        for j in range(3):
            assert rows[i][j] == e.columns[j][i]


def test_multiply_generator_tracks_length(a3):
    e = identity_element(a3)
    for letter in ("2", "1", "3", "2"):
        e = multiply_generator(a3, e, letter)
    assert e == element_of(a3, ("2", "1", "3", "2"))
    assert e.length == 4
    assert multiply_generator(a3, e, "2").length == 3


def test_element_word_is_reduced_witness(a3):
    for word in all_words(a3, 4):
        e = element_of(a3, word)
        witness = element_word(a3, e)
        assert len(witness) == e.length
        assert element_of(a3, witness) == e


def test_length_matches_permutation_inversions(a3):
    for word in all_words(a3, 5):
        expected = inversion_count(perm_of_word(word, 4))
        assert element_of(a3, word).length == expected


# ---------------------------------------------------------------------------
# Enumeration


def test_enumerate_a2(a2):
    layers = enumerate_elements(a2, 3)
    assert [len(layers[k]) for k in range(4)] == [1, 2, 2, 1]


def test_enumerate_a3(a3):
    layers = enumerate_elements(a3, 6)
    sizes = [len(layers[k]) for k in range(7)]
    assert sizes == [1, 3, 5, 6, 5, 3, 1]
    assert sum(sizes) == 24


def test_enumerate_triangle(triangle):
    layers = enumerate_elements(triangle, 2)
    assert [len(layers[k]) for k in range(3)] == [1, 3, 6]


@pytest.mark.parametrize(
    "graph_name,degrees",
    [("a3", (2, 3, 4)), ("a4", (2, 3, 4, 5)), ("d4", (2, 4, 4, 6))],
)
def test_enumerate_matches_poincare_polynomial(graph_name, degrees, request):
    g = request.getfixturevalue(graph_name)
    expected = poincare_layers(degrees)
    layers = enumerate_elements(g, len(expected) - 1)
    assert [len(layers[k]) for k in range(len(expected))] == expected


def test_enumerate_beyond_longest_is_empty(a2):
    layers = enumerate_elements(a2, 5)
    assert layers[4] == () and layers[5] == ()


def test_enumerate_budget(triangle):
    with pytest.raises(BudgetExceededError):
        enumerate_elements(triangle, 6, budget=5)


def test_enumerate_layers_are_duplicate_free(d4):
    layers = enumerate_elements(d4, 5)
    everything = [e for k in layers for e in layers[k]]
    assert len(everything) == len(set(everything))
    for k, layer in layers.items():
        assert all(e.length == k for e in layer)
        assert list(layer) == sorted(layer, key=lambda e: e.columns)


def test_empty_graph():
    g = CoxeterGraph((), frozenset())
    layers = enumerate_elements(g, 2)
    assert [len(layers[k]) for k in range(3)] == [1, 0, 0]
    assert element_of(g, ()) == identity_element(g)


def test_single_vertex_graph():
    g = CoxeterGraph(("1",), frozenset())
    layers = enumerate_elements(g, 3)
    assert [len(layers[k]) for k in range(4)] == [1, 1, 0, 0]


# ---------------------------------------------------------------------------
# Invariants


def _root_ball(g, depth):
    current = {simple_root(g, v) for v in g.vertices}
    seen = set(current)
    for _ in range(depth):
        current = {reflect(g, v, r) for v in g.vertices for r in current} - seen
        seen |= current
    return sorted(seen)


def test_form_preservation(a3):
    roots = _root_ball(a3, 2)
    layers = enumerate_elements(a3, 6)
    for k in layers:
        for e in layers[k]:
            for r1 in roots:
                for r2 in roots:
                    assert form_value(a3, e.apply(r1), e.apply(r2)) == form_value(a3, r1, r2)


def test_reflect_involution(d4):
    for r in _root_ball(d4, 4):
        for v in d4.vertices:
            assert reflect(d4, v, reflect(d4, v, r)) == r


@pytest.mark.parametrize("graph_name", ["a3", "d4"])
def test_root_dichotomy(graph_name, request):
    g = request.getfixturevalue(graph_name)
    layers = enumerate_elements(g, 6)
    for k in layers:
        for e in layers[k]:
            for col in e.columns:
                pos = any(c > 0 for c in col)
                neg = any(c < 0 for c in col)
                assert pos != neg, col


def test_length_consistency_exhaustive(a3):
    for word in all_words(a3, 5):
        e = element_of(a3, word)
        assert e.length <= len(word)
        assert (e.length == len(word)) == is_reduced(a3, word)


@given(word=st.lists(st.sampled_from(D4.vertices), max_size=10).map(tuple))
def test_length_consistency_random(word):
    e = element_of(D4, word)
    assert e.length <= len(word)
    assert (e.length == len(word)) == is_reduced(D4, word)


@given(word=st.lists(st.sampled_from(A3.vertices), max_size=8).map(tuple))
def test_word_entries_sign_decides_reducedness(word):
    entries = word_root_entries(A3, word)
    all_positive = all(all(c >= 0 for c in r) and any(c > 0 for c in r) for r in entries)
    assert all_positive == is_reduced(A3, word)
