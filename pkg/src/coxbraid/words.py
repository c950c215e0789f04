"""Braid moves on words, reduced-word enumeration and commutation classes.

Reduced-word sets are computed by breadth-first closure under braid moves
starting from a single witness word; the Matsumoto-Tits theorem guarantees
completeness.  Commutation classes are the connected components under
short moves only.  Both are memoized per (graph, element), since the
enumerative checks revisit the same elements many times.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .core import (
    BudgetExceededError,
    CoxeterGraph,
    GroupElement,
    Word,
    _column_negative,
    _mul_gen,
    element_word,
)

DEFAULT_WORD_BUDGET = 10**6

SHORT = "short"
LONG = "long"


class NotReducedError(ValueError):
    """The operation requires a reduced word."""


class InvalidMoveError(ValueError):
    """The braid move does not match the word at its position."""


def word_sort_key(g: CoxeterGraph, word: Word) -> tuple[int, ...]:
    """Lexicographic key by letter index in vertex order.

    All canonical word orderings (class representatives, tie-breaks,
    reports) use this key, so renaming vertices cannot reshuffle output.
    """
    index = g._index
    return tuple(index[letter] for letter in word)


@dataclass(frozen=True, order=True)
class BraidMove:
    """A substitution ij -> ji (short) or iji -> jij (long) at ``position``."""

    position: int
    kind: str


def is_reduced(g: CoxeterGraph, word: Word) -> bool:
    """True iff every suffix-reflection root entry is positive.

    Equivalent to the element's length equalling the word length.
    """
    cols = g.identity_columns
    for letter in reversed(word):
        k = g.index(letter)
        if _column_negative(cols[k]):
            return False
        cols = _mul_gen(g, cols, k)
    return True


def _braid_targets(g: CoxeterGraph, word: Word) -> Iterator[tuple[BraidMove, Word]]:
    # No reducedness check here: BFS callers only ever feed reduced words.
    adjacent = g._adjacent
    n = len(word)
    for p in range(n - 1):
        a, b = word[p], word[p + 1]
        if a == b:
            continue
        if (a, b) in adjacent:
            if p + 2 < n and word[p + 2] == a:
                yield BraidMove(p, LONG), word[:p] + (b, a, b) + word[p + 3 :]
        else:
            yield BraidMove(p, SHORT), word[:p] + (b, a) + word[p + 2 :]


def braid_moves(g: CoxeterGraph, word: Word) -> tuple[BraidMove, ...]:
    """All applicable braid moves, left to right.

    Raises :class:`NotReducedError` when the word is not reduced.
    """
    if not is_reduced(g, word):
        raise NotReducedError(f"word {word!r} is not reduced")
    return tuple(move for move, _ in _braid_targets(g, word))


def apply_move(g: CoxeterGraph, word: Word, move: BraidMove) -> Word:
    """Rewrite the block named by the move; everything else is unchanged."""
    p = move.position
    n = len(word)
    if move.kind == SHORT:
        if not (0 <= p <= n - 2):
            raise InvalidMoveError(f"short move at {p} does not fit word of length {n}")
        a, b = word[p], word[p + 1]
        if a == b or g.are_adjacent(a, b):
            raise InvalidMoveError(f"letters {a!r}, {b!r} at {p} do not commute")
        return word[:p] + (b, a) + word[p + 2 :]
    if move.kind == LONG:
        if not (0 <= p <= n - 3):
            raise InvalidMoveError(f"long move at {p} does not fit word of length {n}")
        a, b = word[p], word[p + 1]
        if word[p + 2] != a or a == b or not g.are_adjacent(a, b):
            raise InvalidMoveError(f"no iji block at position {p} of {word!r}")
        return word[:p] + (b, a, b) + word[p + 3 :]
    raise InvalidMoveError(f"unknown move kind {move.kind!r}")


def _bfs_closure(g: CoxeterGraph, seed: Word, cap: int, short_only: bool = False) -> frozenset[Word]:
    seen: set[Word] = {seed}
    queue: deque[Word] = deque((seed,))
    while queue:
        w = queue.popleft()
        for move, target in _braid_targets(g, w):
            if short_only and move.kind != SHORT:
                continue
            if target not in seen:
                seen.add(target)
                if len(seen) > cap:
                    raise BudgetExceededError(f"word budget {cap} exceeded")
                queue.append(target)
    return frozenset(seen)


_RW_CACHE: dict[tuple[CoxeterGraph, GroupElement], frozenset[Word]] = {}


def reduced_words(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> frozenset[Word]:
    """The complete set of reduced words for the element."""
    key = (g, e)
    words = _RW_CACHE.get(key)
    if words is None:
        words = _bfs_closure(g, element_word(g, e), cap)
        _RW_CACHE[key] = words
    elif len(words) > cap:
        raise BudgetExceededError(f"word budget {cap} exceeded")
    return words


@dataclass(frozen=True)
class CommutationClassSet:
    """Partition of a reduced-word set under short-move connectivity.

    Each class is sorted, so its first word is the lexicographically least
    representative; classes are sorted by representative.
    """

    classes: tuple[tuple[Word, ...], ...]

    @cached_property
    def _class_index(self) -> dict[Word, int]:
        return {w: k for k, cls in enumerate(self.classes) for w in cls}

    @property
    def representatives(self) -> tuple[Word, ...]:
        return tuple(cls[0] for cls in self.classes)

    def class_of(self, word: Word) -> int:
        try:
            return self._class_index[word]
        except KeyError:
            raise ValueError(f"word {word!r} is not a reduced word of this element") from None

    def __len__(self) -> int:
        return len(self.classes)


_CLASS_CACHE: dict[tuple[CoxeterGraph, GroupElement], CommutationClassSet] = {}


def commutation_classes(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> CommutationClassSet:
    """Union-find over the reduced-word set, joining along short moves."""
    cache_key = (g, e)
    cached = _CLASS_CACHE.get(cache_key)
    if cached is not None:
        reduced_words(g, e, cap)  # re-raise if the cap is tighter than the cache
        return cached

    def sort_key(w: Word) -> tuple[int, ...]:
        return word_sort_key(g, w)

    words = sorted(reduced_words(g, e, cap), key=sort_key)
    parent = {w: w for w in words}

    def find(w: Word) -> Word:
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for move, target in _braid_targets(g, w):
            if move.kind == SHORT:
                ra, rb = find(w), find(target)
                if ra != rb:
                    parent[ra] = rb

    groups: dict[Word, list[Word]] = {}
    for w in words:
        groups.setdefault(find(w), []).append(w)
    classes = tuple(
        sorted(
            (tuple(sorted(cls, key=sort_key)) for cls in groups.values()),
            key=lambda cls: sort_key(cls[0]),
        )
    )
    result = CommutationClassSet(classes)
    _CLASS_CACHE[cache_key] = result
    return result


def has_iji_subword(g: CoxeterGraph, word: Word) -> bool:
    """True iff some contiguous block is iji with non-commuting i, j."""
    for p in range(len(word) - 2):
        a, b = word[p], word[p + 1]
        if word[p + 2] == a and a != b and g.are_adjacent(a, b):
            return True
    return False


def is_fully_commutative(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> bool:
    """True iff no reduced word of the element contains an iji block.

    Agrees with the single-commutation-class criterion and with the
    no-inversion-triple criteria; the four-way agreement is enforced by
    the verification suite.
    """
    return not any(has_iji_subword(g, w) for w in reduced_words(g, e, cap))
