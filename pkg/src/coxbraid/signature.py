"""Per-class partial orders on inversion sets and the triple-signature map.

Every commutation class induces a partial order on the inversion set: the
transitive closure of "a comes before b in some root sequence of the class
and the form does not vanish on (a, b)".  Fixing a total precedence on the
inversion set, each class is assigned one bit per contractible triple:
0 when the class order and the precedence agree on the two non-sum members
of the triple, 1 otherwise.  The resulting map from commutation classes to
bit vectors is injective; it is surjective exactly for freely braided
elements, which is what ties the class count to the power 2^(number of
contractible triples).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import CoxeterGraph, GroupElement, Root, Word, word_root_entries, roots_orthogonal
from .inversions import (
    RootSequence,
    Triple,
    contractible_triples,
    inversion_set,
    triple_components,
)
from .words import DEFAULT_WORD_BUDGET, commutation_classes


@dataclass(frozen=True)
class Precedence:
    """A total order on a finite set of roots, given as the ordered tuple."""

    order: tuple[Root, ...]

    @cached_property
    def _rank(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.order)}

    def before(self, a: Root, b: Root) -> bool:
        try:
            return self._rank[a] < self._rank[b]
        except KeyError as exc:
            raise ValueError(f"root {exc.args[0]!r} is not in the precedence domain") from None


def default_precedence(roots: Iterable[Root], reverse: bool = False) -> Precedence:
    """Deterministic total order: coefficient tuples compared last vertex
    first (colex).  Any antisymmetric total relation would do; this one is
    cheap and pins all reported bit values.
    """
    ordered = sorted(roots, key=lambda r: tuple(reversed(r)), reverse=reverse)
    return Precedence(tuple(ordered))


@dataclass(frozen=True)
class ClassOrder:
    """Strict partial order on roots, stored as reachability bitmasks."""

    roots: tuple[Root, ...]
    succ: tuple[int, ...]

    @cached_property
    def _index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.roots)}

    def less(self, a: Root, b: Root) -> bool:
        ia = self._index.get(a)
        ib = self._index.get(b)
        if ia is None or ib is None:
            return False
        return bool(self.succ[ia] >> ib & 1)

    @cached_property
    def pairs(self) -> frozenset[tuple[Root, Root]]:
        out = set()
        for ia, mask in enumerate(self.succ):
            b = mask
            while b:
                ib = (b & -b).bit_length() - 1
                out.add((self.roots[ia], self.roots[ib]))
                b &= b - 1
        return frozenset(out)


def _close_transitively(succ: list[int], n: int) -> tuple[int, ...]:
    for k in range(n):
        bit = 1 << k
        reach_k = succ[k]
        for i in range(n):
            if succ[i] & bit:
                succ[i] |= reach_k
    return tuple(succ)


def class_order(
    g: CoxeterGraph, sequences: Iterable[RootSequence | Sequence[Root]]
) -> ClassOrder:
    """Order generated by all the given root sequences of one commutation
    class: a < b whenever a precedes b in some sequence and the form value
    on (a, b) is nonzero, closed transitively.
    """
    seqs = [tuple(s.roots if isinstance(s, RootSequence) else s) for s in sequences]
    support = sorted({r for s in seqs for r in s})
    index = {r: k for k, r in enumerate(support)}
    n = len(support)
    succ = [0] * n
    for seq in seqs:
        idx = [index[r] for r in seq]
        for l in range(len(idx)):
            a = idx[l]
            ra = support[a]
            for m in range(l + 1, len(idx)):
                b = idx[m]
                if not roots_orthogonal(g, ra, support[b]):
                    succ[a] |= 1 << b
    return ClassOrder(tuple(support), _close_transitively(succ, n))


_ORDER_CACHE: dict[tuple[CoxeterGraph, GroupElement], tuple[ClassOrder, ...]] = {}


def _class_orders(
    g: CoxeterGraph, e: GroupElement, cap: int = DEFAULT_WORD_BUDGET
) -> tuple[ClassOrder, ...]:
    # One order per commutation class, aligned with commutation_classes(...).classes.
    key = (g, e)
    cached = _ORDER_CACHE.get(key)
    if cached is not None:
        return cached
    classes = commutation_classes(g, e, cap).classes
    inv = sorted(inversion_set(g, e))
    index = {r: k for k, r in enumerate(inv)}
    n = len(inv)
    ortho = [[roots_orthogonal(g, a, b) for b in inv] for a in inv]
    orders = []
    for cls in classes:
        succ = [0] * n
        for word in cls:
            idx = [index[r] for r in word_root_entries(g, word)]
            for l in range(len(idx)):
                a = idx[l]
                row = ortho[a]
                acc = succ[a]
                for m in range(l + 1, len(idx)):
                    b = idx[m]
                    if not row[b]:
                        acc |= 1 << b
                succ[a] = acc
        orders.append(ClassOrder(tuple(inv), _close_transitively(succ, n)))
    result = tuple(orders)
    _ORDER_CACHE[key] = result
    return result


def triple_key(t: Triple) -> str:
    """Canonical JSON serialization of a triple, used as a mapping key."""
    return json.dumps([list(r) for r in t], separators=(",", ":"))


@dataclass(frozen=True)
class TripleSignature:
    """Total map from the contractible triples of an element to {0, 1}."""

    bits: tuple[tuple[Triple, int], ...]

    @cached_property
    def _map(self) -> dict[Triple, int]:
        return dict(self.bits)

    def bit(self, t: Triple) -> int:
        try:
            return self._map[t]
        except KeyError:
            raise ValueError(f"{t!r} is not in the signature domain") from None

    def restrict(self, triples: Iterable[Triple]) -> "TripleSignature":
        wanted = sorted(triples)
        return TripleSignature(tuple((t, self.bit(t)) for t in wanted))

    def to_json(self) -> dict[str, int]:
        return {triple_key(t): bit for t, bit in self.bits}

    def __len__(self) -> int:
        return len(self.bits)


def _signature_for(
    g: CoxeterGraph,
    e: GroupElement,
    class_index: int,
    precedence: Precedence,
    cap: int = DEFAULT_WORD_BUDGET,
) -> TripleSignature:
    order = _class_orders(g, e, cap)[class_index]
    bits: list[tuple[Triple, int]] = []
    for t in sorted(contractible_triples(g, e, cap)):
        a, b, _total = triple_components(t)
        a_first_class = order.less(a, b)
        b_first_class = order.less(b, a)
        if a_first_class == b_first_class:
            raise RuntimeError(
                f"triple members {a!r}, {b!r} are not strictly comparable in the class order"
            )
        bits.append((t, 0 if a_first_class == precedence.before(a, b) else 1))
    return TripleSignature(tuple(bits))


def class_signature(
    g: CoxeterGraph,
    e: GroupElement,
    class_words: Iterable[Word],
    precedence: Precedence | None = None,
    cap: int = DEFAULT_WORD_BUDGET,
) -> TripleSignature:
    """Signature of the commutation class containing the given words."""
    words = tuple(class_words)
    if not words:
        raise ValueError("a commutation class is nonempty")
    classes = commutation_classes(g, e, cap)
    k = classes.class_of(words[0])
    members = set(classes.classes[k])
    stray = [w for w in words if w not in members]
    if stray:
        raise ValueError(f"words {stray!r} are not in the commutation class of {words[0]!r}")
    if precedence is None:
        precedence = default_precedence(inversion_set(g, e))
    return _signature_for(g, e, k, precedence, cap)


def _signatures_by_class(
    g: CoxeterGraph,
    e: GroupElement,
    precedence: Precedence | None = None,
    cap: int = DEFAULT_WORD_BUDGET,
) -> tuple[TripleSignature, ...]:
    if precedence is None:
        precedence = default_precedence(inversion_set(g, e))
    n_classes = len(commutation_classes(g, e, cap))
    return tuple(_signature_for(g, e, k, precedence, cap) for k in range(n_classes))


def signature_image(
    g: CoxeterGraph,
    e: GroupElement,
    precedence: Precedence | None = None,
    cap: int = DEFAULT_WORD_BUDGET,
) -> frozenset[TripleSignature]:
    """Set of signatures realized over all commutation classes."""
    return frozenset(_signatures_by_class(g, e, precedence, cap))


def signature_injective(
    g: CoxeterGraph,
    e: GroupElement,
    precedence: Precedence | None = None,
    cap: int = DEFAULT_WORD_BUDGET,
) -> bool:
    sigs = _signatures_by_class(g, e, precedence, cap)
    return len(set(sigs)) == len(sigs)


def signature_surjective(
    g: CoxeterGraph,
    e: GroupElement,
    precedence: Precedence | None = None,
    cap: int = DEFAULT_WORD_BUDGET,
) -> bool:
    image = signature_image(g, e, precedence, cap)
    return len(image) == 2 ** len(contractible_triples(g, e, cap))


def separates(
    g: CoxeterGraph,
    e: GroupElement,
    triples: Iterable[Triple],
    precedence: Precedence | None = None,
    cap: int = DEFAULT_WORD_BUDGET,
) -> bool:
    """True iff every 0/1 assignment on the given contractible triples is
    the restriction of some realized signature.
    """
    wanted = tuple(sorted(set(triples)))
    domain = contractible_triples(g, e, cap)
    stray = [t for t in wanted if t not in domain]
    if stray:
        raise ValueError(f"triples {stray!r} are not contractible triples of the element")
    realized = {
        tuple(sig.bit(t) for t in wanted) for sig in signature_image(g, e, precedence, cap)
    }
    return len(realized) == 2 ** len(wanted)
