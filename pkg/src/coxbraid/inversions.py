"""Root sequences, inversion sets, inversion triples and contractibility.

The root sequence of a reduced word lists, in order, the positive roots
the element sends negative; it determines the word and vice versa.  An
inversion triple is a subset {a, b, a+b} of the inversion set; it is
contractible when its three roots appear consecutively (in some order) in
the root sequence of at least one reduced word.  An element is freely
braided when its contractible triples are pairwise disjoint.

>>> from .core import parse_graph, element_of
>>> g = parse_graph('{"vertices": ["1", "2"], "edges": [["1", "2"]]}')
>>> root_sequence(g, ("1", "2", "1")).roots
((1, 0), (1, 1), (0, 1))
>>> contractible_triple_count(g, element_of(g, ("1", "2", "1")))
1
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    CoxeterGraph,
    GroupElement,
    Root,
    Word,
    element_word,
    is_positive_root,
    reflect,
    word_root_entries,
)
from .words import DEFAULT_WORD_BUDGET, NotReducedError, reduced_words

# Canonical identity of a triple: its three roots sorted coordinatewise.
Triple = tuple[Root, Root, Root]


@dataclass(frozen=True)
class RootSequence:
    """Ordered positive roots attached to a reduced word."""

    roots: tuple[Root, ...]
    source_word: Word


def root_sequence(g: CoxeterGraph, word: Word) -> RootSequence:
    """The root sequence of a reduced word.

    The entries are evaluated first; positivity of every entry certifies
    that the word is reduced, otherwise :class:`NotReducedError` is raised.
    """
    entries = word_root_entries(g, word)
    for r in entries:
        if not is_positive_root(r):
            raise NotReducedError(f"word {word!r} is not reduced (entry {r!r})")
    return RootSequence(entries, tuple(word))


def word_from_root_sequence(
    g: CoxeterGraph, rs: RootSequence | Sequence[Root]
) -> Word:
    """Invert :func:`root_sequence`: peel the first entry, which names the
    last letter, and reflect the remaining entries back.
    """
    roots = list(rs.roots if isinstance(rs, RootSequence) else rs)
    suffix: list[str] = []
    while roots:
        first = roots[0]
        support = [k for k, c in enumerate(first) if c != 0]
        if len(support) != 1 or first[support[0]] != 1:
            raise ValueError(
                f"sequence is not realizable: entry {first!r} is not a simple root after peeling"
            )
        letter = g.vertices[support[0]]
        suffix.append(letter)
        roots = [reflect(g, letter, r) for r in roots[1:]]
    return tuple(reversed(suffix))


def inversion_set(g: CoxeterGraph, e: GroupElement) -> frozenset[Root]:
    """Positive roots sent negative by the element; size equals its length."""
    return frozenset(word_root_entries(g, element_word(g, e)))


def _vec_add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def make_triple(a: Root, b: Root) -> Triple:
    t: tuple[Root, ...] = tuple(sorted((a, b, _vec_add(a, b))))
    return t  # type: ignore[return-value]


def triple_components(t: Triple) -> tuple[Root, Root, Root]:
    """Split a triple into ``(a, b, a+b)`` with ``a < b`` coordinatewise-lex."""
    for k in range(3):
        rest = [t[j] for j in range(3) if j != k]
        if _vec_add(rest[0], rest[1]) == t[k]:
            return rest[0], rest[1], t[k]
    raise ValueError(f"{t!r} is not an inversion triple: no member is the sum of the others")


def inversion_triples(g: CoxeterGraph, e: GroupElement) -> frozenset[Triple]:
    """All subsets {a, b, a+b} of the inversion set, found by pair-sum hashing."""
    inv = sorted(inversion_set(g, e))
    members = set(inv)
    triples: set[Triple] = set()
    for i in range(len(inv)):
        for j in range(i + 1, len(inv)):
            total = _vec_add(inv[i], inv[j])
            if total in members:
                triples.add(make_triple(inv[i], inv[j]))
    return frozenset(triples)


_CONTRACTIBLE_CACHE: dict[tuple[CoxeterGraph, GroupElement], frozenset[Triple]] = {}


def contractible_triples(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> frozenset[Triple]:
    """Triples whose roots appear consecutively, in some order, in the root
    sequence of at least one reduced word.  Scans the full reduced-word set
    and memoizes per element.
    """
    key = (g, e)
    cached = _CONTRACTIBLE_CACHE.get(key)
    if cached is not None:
        reduced_words(g, e, cap)
        return cached
    triples = inversion_triples(g, e)
    found: set[Triple] = set()
    if triples:
        for word in reduced_words(g, e, cap):
            entries = word_root_entries(g, word)
            for l in range(len(entries) - 2):
                window: tuple[Root, ...] = tuple(sorted(entries[l : l + 3]))
                if window in triples:
                    found.add(window)  # type: ignore[arg-type]
            if len(found) == len(triples):
                break
    result = frozenset(found)
    _CONTRACTIBLE_CACHE[key] = result
    return result


def is_contractible(
    g: CoxeterGraph, e: GroupElement, t: Triple, cap: int = DEFAULT_WORD_BUDGET
) -> bool:
    if t not in inversion_triples(g, e):
        raise ValueError(f"{t!r} is not an inversion triple of the element")
    return t in contractible_triples(g, e, cap)


def contractible_triple_count(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> int:
    return len(contractible_triples(g, e, cap))


def is_freely_braided(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> bool:
    """True iff the contractible triples are pairwise disjoint as root sets."""
    seen: set[Root] = set()
    for t in contractible_triples(g, e, cap):
        for r in t:
            if r in seen:
                return False
            seen.add(r)
    return True
