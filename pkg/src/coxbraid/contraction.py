"""Braid sequences, contracted reduced words, close words and the
letter-deletion projection onto fully commutative elements.

A braid sequence of a word is a list of pairwise-disjoint iji blocks
(non-commuting i, j), taken in position order.  A reduced word for a
freely braided element is contracted when it carries a braid sequence with
one block per contractible triple; that maximal sequence is unique, and
deleting the rightmost letter of its last block yields a contracted word
for a freely braided element with exactly one fewer contractible triple.
Iterating the deletion lands on a reduced word for a fully commutative
element, which is asserted at every step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CoxeterGraph,
    GroupElement,
    Letter,
    Root,
    Word,
    element_of,
    multiply_generator,
    reflect,
    simple_root,
)
from .inversions import (
    Triple,
    contractible_triple_count,
    contractible_triples,
    is_freely_braided,
)
from .words import (
    DEFAULT_WORD_BUDGET,
    is_fully_commutative,
    is_reduced,
    reduced_words,
    word_sort_key,
)

BraidSeq = tuple[int, ...]


class NotContractedError(ValueError):
    """The operation requires a contracted reduced word."""


class NotFreelyBraidedError(ValueError):
    """The operation requires a freely braided element."""


def block_positions(g: CoxeterGraph, word: Word) -> tuple[int, ...]:
    """Start positions of all candidate iji blocks (non-commuting i, j)."""
    out = []
    for p in range(len(word) - 2):
        a, b = word[p], word[p + 1]
        if word[p + 2] == a and a != b and g.are_adjacent(a, b):
            out.append(p)
    return tuple(out)


def braid_sequences(g: CoxeterGraph, word: Word) -> frozenset[BraidSeq]:
    """All selections of pairwise-disjoint blocks, in increasing position
    order, including the empty selection.  Overlapping candidates may show
    up in different selections but never together.
    """
    blocks = block_positions(g, word)
    seqs: list[BraidSeq] = []
    chosen: list[int] = []

    def extend(start: int) -> None:
        seqs.append(tuple(chosen))
        for k in range(start, len(blocks)):
            if not chosen or blocks[k] >= chosen[-1] + 3:
                chosen.append(blocks[k])
                extend(k + 1)
                chosen.pop()

    extend(0)
    return frozenset(seqs)


def max_braid_terms(g: CoxeterGraph, word: Word) -> int:
    """Largest number of pairwise-disjoint blocks; greedy by position is
    optimal because all blocks have the same width.
    """
    count = 0
    horizon = -3
    for p in block_positions(g, word):
        if p >= horizon + 3:
            count += 1
            horizon = p
    return count


def is_contracted(g: CoxeterGraph, word: Word, cap: int = DEFAULT_WORD_BUDGET) -> bool:
    """Reduced, freely braided, and carrying a braid sequence with one block
    per contractible triple.
    """
    if not is_reduced(g, word):
        return False
    e = element_of(g, word)
    if not is_freely_braided(g, e, cap):
        return False
    return max_braid_terms(g, word) == contractible_triple_count(g, e, cap)


def contracted_reduced_word(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> Word:
    """The lexicographically least contracted reduced word of a freely
    braided element.  Uniqueness of its maximal braid sequence is asserted.
    """
    if not is_freely_braided(g, e, cap):
        raise NotFreelyBraidedError("element is not freely braided")
    n = contractible_triple_count(g, e, cap)
    for word in sorted(reduced_words(g, e, cap), key=lambda w: word_sort_key(g, w)):
        if max_braid_terms(g, word) == n:
            _maximal_braid_sequence(g, word, n)
            return word
    raise RuntimeError("freely braided element without a contracted reduced word")


def _maximal_braid_sequence(g: CoxeterGraph, word: Word, terms: int) -> BraidSeq:
    witnesses = [s for s in braid_sequences(g, word) if len(s) == terms]
    if len(witnesses) != 1:
        raise RuntimeError(
            f"expected a unique {terms}-term braid sequence for {word!r}, found {len(witnesses)}"
        )
    return witnesses[0]


def _apply_long_blocks(g: CoxeterGraph, word: Word, seq: BraidSeq) -> Word:
    out = list(word)
    for p in seq:
        i, j = out[p], out[p + 1]
        out[p : p + 3] = [j, i, j]
    return tuple(out)


def close_words(g: CoxeterGraph, word: Word) -> frozenset[Word]:
    """Words obtained by long-moving every block of some braid sequence;
    the empty sequence contributes the word itself.
    """
    return frozenset(
        _apply_long_blocks(g, word, seq) for seq in braid_sequences(g, word)
    )


@dataclass(frozen=True)
class DeletionStep:
    word_before: Word
    deleted_position: int
    word_after: Word
    triples_before: int
    triples_after: int


def _delete_once(g: CoxeterGraph, word: Word, cap: int) -> DeletionStep:
    e = element_of(g, word)
    n = contractible_triple_count(g, e, cap)
    if n == 0:
        raise ValueError("deletion is undefined on words with no contractible triples")
    seq = _maximal_braid_sequence(g, word, n)
    position = seq[-1] + 2
    after = word[:position] + word[position + 1 :]
    if not is_contracted(g, after, cap):
        raise RuntimeError(f"deletion broke contractedness: {word!r} -> {after!r}")
    n_after = contractible_triple_count(g, element_of(g, after), cap)
    if n_after != n - 1:
        raise RuntimeError(
            f"deletion changed the triple count {n} -> {n_after}, expected {n - 1}"
        )
    return DeletionStep(word, position, after, n, n_after)


def braid_deletion(
    g: CoxeterGraph, word: Word, steps: int = 1, cap: int = DEFAULT_WORD_BUDGET
) -> Word:
    """Delete, ``steps`` times, the rightmost letter of the last block of
    the unique maximal braid sequence.  Zero steps return the word itself.

    Each intermediate word is checked to be contracted with the triple
    count reduced by exactly one.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if not is_contracted(g, word, cap):
        raise NotContractedError(f"{word!r} is not a contracted reduced word")
    n = contractible_triple_count(g, element_of(g, word), cap)
    if steps > n:
        raise ValueError(f"cannot delete {steps} letters: only {n} contractible triples")
    current = tuple(word)
    for _ in range(steps):
        current = _delete_once(g, current, cap).word_after
    return current


def projection_trace(
    g: CoxeterGraph, word: Word, cap: int = DEFAULT_WORD_BUDGET
) -> tuple[DeletionStep, ...]:
    """The full deletion chain down to triple count zero, one record per step."""
    if not is_contracted(g, word, cap):
        raise NotContractedError(f"{word!r} is not a contracted reduced word")
    steps: list[DeletionStep] = []
    current = tuple(word)
    while contractible_triple_count(g, element_of(g, current), cap) > 0:
        step = _delete_once(g, current, cap)
        steps.append(step)
        current = step.word_after
    return tuple(steps)


def fc_projection(g: CoxeterGraph, word: Word, cap: int = DEFAULT_WORD_BUDGET) -> Word:
    """Iterate the deletion until no contractible triple remains; the result
    is checked to be a reduced word for a fully commutative element.
    """
    trace = projection_trace(g, word, cap)
    final = trace[-1].word_after if trace else tuple(word)
    if not is_reduced(g, final):
        raise RuntimeError(f"projection produced a non-reduced word {final!r}")
    if not is_fully_commutative(g, element_of(g, final), cap):
        raise RuntimeError(f"projection landed on a non-fully-commutative element: {final!r}")
    return final


@dataclass(frozen=True)
class WeakOrderStepReport:
    """What happens to the contractible-triple structure when a freely
    braided element is multiplied by one generator.

    ``alpha_in_triple`` refers to the element itself for down steps and to
    the taller product for up steps; ``clause`` records which regime fired.
    """

    letter: Letter
    direction: str  # "up" | "down"
    clause: str  # "down" | "up-disjoint" | "up-interfering"
    alpha_in_triple: bool
    triples_before: int
    triples_after: int
    freely_braided_after: bool
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "letter": self.letter,
            "direction": self.direction,
            "clause": self.clause,
            "alpha_in_triple": self.alpha_in_triple,
            "triples_before": self.triples_before,
            "triples_after": self.triples_after,
            "freely_braided_after": self.freely_braided_after,
            "passed": self.passed,
            "violations": list(self.violations),
        }


def _reflected_triple(g: CoxeterGraph, i: Letter, t: Triple) -> Triple:
    reflected: tuple[Root, ...] = tuple(sorted(reflect(g, i, r) for r in t))
    return reflected  # type: ignore[return-value]


def weak_order_step(
    g: CoxeterGraph, e: GroupElement, i: Letter, cap: int = DEFAULT_WORD_BUDGET
) -> WeakOrderStepReport:
    """Report on multiplying a freely braided element by one generator.

    Down steps must stay freely braided, with the triple count dropping by
    one exactly when the generator's simple root lies in a contractible
    triple.  Up steps where that root avoids every contractible triple of
    the product must keep the count, stay freely braided, and carry the
    triples across by the reflection.  Up steps into an interfering root
    admit no conclusion and are only recorded.
    """
    if not is_freely_braided(g, e, cap):
        raise NotFreelyBraidedError("element is not freely braided")
    alpha = simple_root(g, i)
    product = multiply_generator(g, e, i)
    up = product.length > e.length
    n_before = contractible_triple_count(g, e, cap)
    n_after = contractible_triple_count(g, product, cap)
    fb_after = is_freely_braided(g, product, cap)
    violations: list[str] = []

    if not up:
        in_triple = any(alpha in t for t in contractible_triples(g, e, cap))
        clause = "down"
        expected = n_before - 1 if in_triple else n_before
        if n_after != expected:
            violations.append(f"triple count {n_before} -> {n_after}, expected {expected}")
        if not fb_after:
            violations.append("product is not freely braided")
    else:
        product_triples = contractible_triples(g, product, cap)
        in_triple = any(alpha in t for t in product_triples)
        if not in_triple:
            clause = "up-disjoint"
            expected_triples = frozenset(
                _reflected_triple(g, i, t) for t in contractible_triples(g, e, cap)
            )
            if product_triples != expected_triples:
                violations.append("product triples are not the reflected triples")
            if n_after != n_before:
                violations.append(f"triple count {n_before} -> {n_after}, expected no change")
            if not fb_after:
                violations.append("product is not freely braided")
        else:
            clause = "up-interfering"

    return WeakOrderStepReport(
        letter=i,
        direction="up" if up else "down",
        clause=clause,
        alpha_in_triple=in_triple,
        triples_before=n_before,
        triples_after=n_after,
        freely_braided_after=fb_after,
        violations=tuple(violations),
    )
