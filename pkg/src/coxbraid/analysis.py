"""Graph classification, growth tables and the exhaustive verification suite.

``classify_graph`` recognizes the connected components that guarantee
finitely many fully commutative (equivalently, freely braided) elements:
paths, three-legged trees with legs {1, 1, n-3}, and three-legged trees
with legs {1, 2, n-4}.  ``growth_probe`` tabulates, per length, the number
of elements, of fully commutative elements and of freely braided elements.
``verify_suite`` runs every structural law exposed by the other modules
over all elements up to a length bound and reports one named pass/fail
line per law, with the first counterexample in canonical order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .core import (
    BudgetExceededError,
    CoxeterGraph,
    DEFAULT_ELEMENT_BUDGET,
    GroupElement,
    Root,
    Word,
    element_of,
    element_word,
    enumerate_elements,
    form_value,
    reflect,
    roots_orthogonal,
    simple_root,
    word_root_entries,
)
from .words import (
    DEFAULT_WORD_BUDGET,
    _bfs_closure,
    commutation_classes,
    has_iji_subword,
    is_fully_commutative,
    is_reduced,
    reduced_words,
    word_sort_key,
)
from .inversions import (
    contractible_triple_count,
    inversion_set,
    inversion_triples,
    is_freely_braided,
)
from .signature import default_precedence, signature_injective, signature_surjective
from .contraction import (
    block_positions,
    braid_deletion,
    braid_sequences,
    close_words,
    contracted_reduced_word,
    fc_projection,
    is_contracted,
    max_braid_terms,
    projection_trace,
    weak_order_step,
    _apply_long_blocks,
    _maximal_braid_sequence,
)


# ---------------------------------------------------------------------------
# Component classification


@dataclass(frozen=True)
class ComponentType:
    label: str  # "A" | "D" | "E" | "other"
    size: int

    @property
    def name(self) -> str:
        return f"{self.label}({self.size})"


@dataclass(frozen=True)
class Classification:
    components: tuple[ComponentType, ...]
    fc_finite: bool

    @property
    def verdict(self) -> str:
        return "fc-finite" if self.fc_finite else "fc-infinite"


def _components(g: CoxeterGraph) -> list[list[str]]:
    nbrs: dict[str, set[str]] = {v: set() for v in g.vertices}
    for a, b in g.edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    seen: set[str] = set()
    comps: list[list[str]] = []
    for v in g.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp, key=g.index))
    return comps


def _component_type(g: CoxeterGraph, comp: list[str]) -> ComponentType:
    n = len(comp)
    members = set(comp)
    edges = [e for e in g.edges if e[0] in members]
    if len(edges) != n - 1:
        return ComponentType("other", n)  # connected with a cycle
    degree = {v: 0 for v in comp}
    nbrs: dict[str, list[str]] = {v: [] for v in comp}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
        nbrs[a].append(b)
        nbrs[b].append(a)
    if max(degree.values(), default=0) <= 2:
        return ComponentType("A", n)
    branch = [v for v, d in degree.items() if d >= 3]
    if len(branch) != 1 or degree[branch[0]] != 3:
        return ComponentType("other", n)
    center = branch[0]
    legs = []
    for start in nbrs[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [w for w in nbrs[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs == [1, 1, n - 3]:
        return ComponentType("D", n)
    if n >= 6 and legs == sorted([1, 2, n - 4]):
        return ComponentType("E", n)
    return ComponentType("other", n)


def classify_graph(g: CoxeterGraph) -> Classification:
    """Label each connected component and decide whether the group has
    finitely many fully commutative elements (equivalently, finitely many
    freely braided elements).
    """
    comps = tuple(_component_type(g, comp) for comp in _components(g))
    return Classification(comps, all(c.label in ("A", "D", "E") for c in comps))


# ---------------------------------------------------------------------------
# Growth tables


@dataclass(frozen=True)
class GrowthRow:
    length: int
    elements: int
    fully_commutative: int
    freely_braided: int


@dataclass(frozen=True)
class GrowthTable:
    rows: tuple[GrowthRow, ...]


def growth_probe(
    g: CoxeterGraph,
    max_len: int,
    element_budget: int = DEFAULT_ELEMENT_BUDGET,
    word_budget: int = DEFAULT_WORD_BUDGET,
) -> GrowthTable:
    """Exact per-length counts of elements, fully commutative elements and
    freely braided elements, up to ``max_len``.
    """
    layers = enumerate_elements(g, max_len, element_budget)
    rows = []
    for length in range(max_len + 1):
        layer = layers.get(length, ())
        fc = sum(1 for e in layer if is_fully_commutative(g, e, word_budget))
        fb = sum(1 for e in layer if is_freely_braided(g, e, word_budget))
        rows.append(GrowthRow(length, len(layer), fc, fb))
    return GrowthTable(tuple(rows))


def brute_force_growth(g: CoxeterGraph, max_len: int) -> GrowthTable:
    """Independent oracle for :func:`growth_probe`: filter *all* words of
    each length for reducedness (length computed by greedy descent inside
    ``element_of``), group them by element, and recompute the counts from
    those word sets alone.  Exponential in ``max_len``; intended for small
    bounds only.
    """
    by_element: dict[GroupElement, set[Word]] = {}
    for length in range(max_len + 1):
        for word in itertools.product(g.vertices, repeat=length):
            e = element_of(g, word)
            if e.length == length:
                by_element.setdefault(e, set()).add(word)

    def element_fc(words: set[Word]) -> bool:
        for w in words:
            for p in range(len(w) - 2):
                if w[p] == w[p + 2] and w[p] != w[p + 1] and g.are_adjacent(w[p], w[p + 1]):
                    return False
        return True

    def element_fb(words: set[Word]) -> bool:
        triples: set[tuple[Root, ...]] = set()
        for w in words:
            entries = word_root_entries(g, w)
            for l in range(len(entries) - 2):
                a, b, c = entries[l], entries[l + 1], entries[l + 2]
                window = tuple(sorted((a, b, c)))
                for k in range(3):
                    rest = [window[j] for j in range(3) if j != k]
                    if tuple(x + y for x, y in zip(rest[0], rest[1])) == window[k]:
                        triples.add(window)
                        break
        seen: set[Root] = set()
        for t in triples:
            for r in t:
                if r in seen:
                    return False
                seen.add(r)
        return True

    rows = []
    for length in range(max_len + 1):
        group = [ws for e, ws in by_element.items() if e.length == length]
        rows.append(
            GrowthRow(
                length,
                len(group),
                sum(1 for ws in group if element_fc(ws)),
                sum(1 for ws in group if element_fb(ws)),
            )
        )
    return GrowthTable(tuple(rows))


# ---------------------------------------------------------------------------
# Verification suite


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "PASS" | "FAIL" | "BUDGET"
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    max_len: int
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.status == "PASS" for r in self.results)

    @property
    def budget_exceeded(self) -> bool:
        return any(r.status == "BUDGET" for r in self.results)

    def render(self) -> str:
        lines = []
        for r in self.results:
            line = f"{r.status} {r.name}"
            if r.detail:
                line += f": {r.detail}"
            lines.append(line)
        counts = (
            len(self.results),
            sum(1 for r in self.results if r.status == "PASS"),
            sum(1 for r in self.results if r.status == "FAIL"),
            sum(1 for r in self.results if r.status == "BUDGET"),
        )
        lines.append(
            "summary: %d checks, %d passed, %d failed, %d budget-exceeded" % counts
        )
        return "\n".join(lines)


@dataclass
class _Ctx:
    g: CoxeterGraph
    max_len: int
    word_budget: int
    elements: tuple[GroupElement, ...]  # canonical order: length, then matrix

    def freely_braided(self) -> list[GroupElement]:
        return [e for e in self.elements if is_freely_braided(self.g, e, self.word_budget)]

    def witness(self, e: GroupElement) -> str:
        return ",".join(element_word(self.g, e)) or "<identity>"


def _root_orbit(g: CoxeterGraph, depth: int) -> list[Root]:
    current = {simple_root(g, v) for v in g.vertices}
    seen = set(current)
    for _ in range(depth):
        nxt = {reflect(g, v, r) for v in g.vertices for r in current} - seen
        seen |= nxt
        current = nxt
    return sorted(seen)


def _check_form_preservation(ctx: _Ctx) -> str | None:
    roots = _root_orbit(ctx.g, 2)
    for e in ctx.elements:
        for r1 in roots:
            for r2 in roots:
                if form_value(ctx.g, e.apply(r1), e.apply(r2)) != form_value(ctx.g, r1, r2):
                    return f"element {ctx.witness(e)} moved form value on ({r1}, {r2})"
    return None


def _check_reflection_involution(ctx: _Ctx) -> str | None:
    for r in _root_orbit(ctx.g, 4):
        for v in ctx.g.vertices:
            if reflect(ctx.g, v, reflect(ctx.g, v, r)) != r:
                return f"reflection at {v} is not an involution on {r}"
    return None


def _check_root_sign_dichotomy(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        for col in e.columns:
            pos = any(c > 0 for c in col)
            neg = any(c < 0 for c in col)
            if pos == neg:  # mixed signs, or the zero vector
                return f"element {ctx.witness(e)} has non-root column {col}"
    return None


def _check_length_consistency(ctx: _Ctx) -> str | None:
    bound = min(ctx.max_len, 6)
    for length in range(bound + 1):
        for word in itertools.product(ctx.g.vertices, repeat=length):
            e = element_of(ctx.g, word)
            if e.length > length:
                return f"length {e.length} exceeds word length for {word}"
            if (e.length == length) != is_reduced(ctx.g, word):
                return f"length/reducedness disagree on {word}"
    return None


def _check_matsumoto_tits(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        words = reduced_words(ctx.g, e, ctx.word_budget)
        seed = max(words, key=lambda w: word_sort_key(ctx.g, w))
        alternative = _bfs_closure(ctx.g, seed, ctx.word_budget)
        if alternative != words:
            return f"closures from two words differ for {ctx.witness(e)}"
    return None


def _check_class_bound(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        count = len(commutation_classes(ctx.g, e, ctx.word_budget))
        if count > 2 ** contractible_triple_count(ctx.g, e, ctx.word_budget):
            return f"class count {count} beats the bound for {ctx.witness(e)}"
    return None


def _check_class_equality_iff_fb(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        count = len(commutation_classes(ctx.g, e, ctx.word_budget))
        bound = 2 ** contractible_triple_count(ctx.g, e, ctx.word_budget)
        if (count == bound) != is_freely_braided(ctx.g, e, ctx.word_budget):
            return f"equality/freely-braided mismatch for {ctx.witness(e)}"
    return None


def _check_fc_four_way(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        one_class = len(commutation_classes(ctx.g, e, ctx.word_budget)) == 1
        no_triples = not inversion_triples(ctx.g, e)
        no_contractible = contractible_triple_count(ctx.g, e, ctx.word_budget) == 0
        no_block = not any(
            has_iji_subword(ctx.g, w) for w in reduced_words(ctx.g, e, ctx.word_budget)
        )
        if not (one_class == no_triples == no_contractible == no_block):
            return (
                f"criteria disagree for {ctx.witness(e)}: "
                f"{one_class}/{no_triples}/{no_contractible}/{no_block}"
            )
    return None


def _short_move_positions(ctx: _Ctx, word: Word) -> list[int]:
    out = []
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if a != b and not ctx.g.are_adjacent(a, b):
            out.append(p)
    return out


def _check_short_move_root_swap(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            entries = word_root_entries(ctx.g, word)
            n = len(word)
            for p in _short_move_positions(ctx, word):
                swapped = word[:p] + (word[p + 1], word[p]) + word[p + 2 :]
                other = word_root_entries(ctx.g, swapped)
                s = n - p - 2
                expected = list(entries)
                expected[s], expected[s + 1] = expected[s + 1], expected[s]
                if list(other) != expected:
                    return f"short move at {p} of {word} is not an entry swap"
                if not roots_orthogonal(ctx.g, entries[s], entries[s + 1]):
                    return f"swapped entries at {p} of {word} are not orthogonal"
    return None


def _check_orthogonality_converse(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            entries = word_root_entries(ctx.g, word)
            n = len(word)
            for s in range(n - 1):
                if roots_orthogonal(ctx.g, entries[s], entries[s + 1]):
                    p = n - s - 2
                    if ctx.g.m(word[p], word[p + 1]) != 2:
                        return f"orthogonal entries at {s} of {word} without a short move"
    return None


def _check_long_move_root_action(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            entries = word_root_entries(ctx.g, word)
            n = len(word)
            for p in block_positions(ctx.g, word):
                i, j = word[p], word[p + 1]
                rewritten = word[:p] + (j, i, j) + word[p + 3 :]
                other = word_root_entries(ctx.g, rewritten)
                s = n - p - 3
                if tuple(x + y for x, y in zip(entries[s], entries[s + 2])) != entries[s + 1]:
                    return f"long move at {p} of {word}: middle entry is not the sum"
                expected = list(entries)
                expected[s], expected[s + 2] = expected[s + 2], expected[s]
                if list(other) != expected:
                    return f"long move at {p} of {word} is not an outer swap"
    return None


def _check_sum_converse(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            entries = word_root_entries(ctx.g, word)
            n = len(word)
            for s in range(n - 2):
                if tuple(x + y for x, y in zip(entries[s], entries[s + 2])) == entries[s + 1]:
                    p = n - s - 3
                    a, b = word[p], word[p + 1]
                    if not (word[p + 2] == a and a != b and ctx.g.m(a, b) == 3):
                        return f"summed entries at {s} of {word} without an iji block"
    return None


def _check_inversion_set_independence(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        expected = inversion_set(ctx.g, e)
        if len(expected) != e.length:
            return f"inversion set size is not the length for {ctx.witness(e)}"
        for word in reduced_words(ctx.g, e, ctx.word_budget):
            if frozenset(word_root_entries(ctx.g, word)) != expected:
                return f"inversion set depends on the word for {ctx.witness(e)}"
    return None


def _check_consecutive_triple_pattern(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        triples = inversion_triples(ctx.g, e)
        if not triples:
            continue
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            entries = word_root_entries(ctx.g, word)
            for s in range(len(entries) - 2):
                window = tuple(sorted(entries[s : s + 3]))
                if window in triples:
                    a, b, c = entries[s], entries[s + 1], entries[s + 2]
                    if tuple(x + y for x, y in zip(a, c)) != b:
                        return f"consecutive triple at {s} of {word} has a non-sum middle"
    return None


def _check_signature_injectivity(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        inv = inversion_set(ctx.g, e)
        for reverse in (False, True):
            prec = default_precedence(inv, reverse=reverse)
            if not signature_injective(ctx.g, e, prec, ctx.word_budget):
                return f"signature map is not injective for {ctx.witness(e)} (reverse={reverse})"
    return None


def _check_signature_precedence_reversal(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        inv = inversion_set(ctx.g, e)
        lex = signature_surjective(ctx.g, e, default_precedence(inv), ctx.word_budget)
        rev = signature_surjective(
            ctx.g, e, default_precedence(inv, reverse=True), ctx.word_budget
        )
        if lex != rev:
            return f"surjectivity flips under precedence reversal for {ctx.witness(e)}"
    return None


def _check_class_bijection(ctx: _Ctx) -> str | None:
    # Partition root sequences directly (swap adjacent orthogonal entries)
    # and compare the class count with the word-side partition.
    for e in ctx.elements:
        words = sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w))
        seqs = [word_root_entries(ctx.g, w) for w in words]
        index = {s: k for k, s in enumerate(seqs)}
        if len(index) != len(seqs):
            return f"root sequences are not distinct for {ctx.witness(e)}"
        parent = list(range(len(seqs)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k, seq in enumerate(seqs):
            for s in range(len(seq) - 1):
                if roots_orthogonal(ctx.g, seq[s], seq[s + 1]):
                    swapped = seq[:s] + (seq[s + 1], seq[s]) + seq[s + 2 :]
                    other = index.get(swapped)
                    if other is None:
                        return f"orthogonal swap left the sequence set for {ctx.witness(e)}"
                    ra, rb = find(k), find(other)
                    if ra != rb:
                        parent[ra] = rb
        seq_classes = len({find(k) for k in range(len(seqs))})
        word_classes = len(commutation_classes(ctx.g, e, ctx.word_budget))
        if seq_classes != word_classes:
            return (
                f"sequence classes {seq_classes} != word classes {word_classes} "
                f"for {ctx.witness(e)}"
            )
    return None


def _check_close_words_representatives(ctx: _Ctx) -> str | None:
    for e in ctx.freely_braided():
        n = contractible_triple_count(ctx.g, e, ctx.word_budget)
        word = contracted_reduced_word(ctx.g, e, ctx.word_budget)
        close = close_words(ctx.g, word)
        if len(close) != 2**n:
            return f"{ctx.witness(e)}: {len(close)} close words, expected {2 ** n}"
        classes = commutation_classes(ctx.g, e, ctx.word_budget)
        hit = {classes.class_of(w) for w in close}
        if len(hit) != len(close) or len(hit) != len(classes):
            return f"close words of {ctx.witness(e)} do not hit every class exactly once"
    return None


def _check_maximal_sequence_unique(ctx: _Ctx) -> str | None:
    for e in ctx.freely_braided():
        n = contractible_triple_count(ctx.g, e, ctx.word_budget)
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            if max_braid_terms(ctx.g, word) == n:
                witnesses = [s for s in braid_sequences(ctx.g, word) if len(s) == n]
                if len(witnesses) != 1:
                    return f"{word} has {len(witnesses)} maximal braid sequences"
    return None


def _check_close_words_element(ctx: _Ctx) -> str | None:
    for e in ctx.elements:
        for word in sorted(reduced_words(ctx.g, e, ctx.word_budget), key=lambda w: word_sort_key(ctx.g, w)):
            for close in close_words(ctx.g, word):
                if element_of(ctx.g, close) != e:
                    return f"close word {close} of {word} changed the element"
    return None


def _check_close_words_contracted(ctx: _Ctx) -> str | None:
    for e in ctx.freely_braided():
        word = contracted_reduced_word(ctx.g, e, ctx.word_budget)
        for close in close_words(ctx.g, word):
            if not is_contracted(ctx.g, close, ctx.word_budget):
                return f"close word {close} of {word} is not contracted"
    return None


def _check_braid_deletion_chain(ctx: _Ctx) -> str | None:
    for e in ctx.freely_braided():
        word = contracted_reduced_word(ctx.g, e, ctx.word_budget)
        trace = projection_trace(ctx.g, word, ctx.word_budget)  # asserts per step
        final = trace[-1].word_after if trace else word
        if contractible_triple_count(ctx.g, element_of(ctx.g, final), ctx.word_budget):
            return f"projection of {word} kept a contractible triple"
        if fc_projection(ctx.g, word, ctx.word_budget) != final:
            return f"projection of {word} is not the deletion chain endpoint"
    return None


def _check_deletion_close_words(ctx: _Ctx) -> str | None:
    for e in ctx.freely_braided():
        n = contractible_triple_count(ctx.g, e, ctx.word_budget)
        if n == 0:
            continue
        word = contracted_reduced_word(ctx.g, e, ctx.word_budget)
        blocks = _maximal_braid_sequence(ctx.g, word, n)
        deleted = braid_deletion(ctx.g, word, 1, ctx.word_budget)
        allowed = set()
        for k in range(n):  # subsets of the blocks other than the last
            for combo in itertools.combinations(blocks[:-1], k):
                sibling = _apply_long_blocks(ctx.g, word, combo)
                allowed.add(braid_deletion(ctx.g, sibling, 1, ctx.word_budget))
        stray = close_words(ctx.g, deleted) - allowed
        if stray:
            return f"close word {sorted(stray)[0]} of the deletion is not a deleted sibling"
    return None


def _check_weak_order_steps(ctx: _Ctx) -> str | None:
    for e in ctx.freely_braided():
        for v in ctx.g.vertices:
            report = weak_order_step(ctx.g, e, v, ctx.word_budget)
            if not report.passed:
                return f"{ctx.witness(e)} * {v}: {'; '.join(report.violations)}"
    return None


def _check_growth_monotone(ctx: _Ctx) -> str | None:
    table = growth_probe(ctx.g, ctx.max_len, word_budget=ctx.word_budget)
    for row in table.rows:
        if not (row.fully_commutative <= row.freely_braided <= row.elements):
            return f"row {row.length}: {row.fully_commutative}/{row.freely_braided}/{row.elements}"
    return None


def _check_brute_force_crosscheck(ctx: _Ctx) -> str | None:
    bound = min(ctx.max_len, 6)
    expected = brute_force_growth(ctx.g, bound)
    actual = growth_probe(ctx.g, bound, word_budget=ctx.word_budget)
    if expected != actual:
        for exp, act in zip(expected.rows, actual.rows):
            if exp != act:
                return f"length {exp.length}: brute force {exp} != probe {act}"
    return None


def _check_classifier_relabel_invariance(ctx: _Ctx) -> str | None:
    g = ctx.g
    renamed = {v: g.vertices[g.rank - 1 - k] for k, v in enumerate(g.vertices)}
    relabeled = CoxeterGraph(
        g.vertices, frozenset((renamed[a], renamed[b]) for a, b in g.edges)
    )
    before = classify_graph(g)
    after = classify_graph(relabeled)
    if sorted((c.label, c.size) for c in before.components) != sorted(
        (c.label, c.size) for c in after.components
    ):
        return "component labels changed under relabeling"
    if before.fc_finite != after.fc_finite:
        return "verdict changed under relabeling"
    return None


_CHECKS: tuple[tuple[str, Callable[[_Ctx], str | None]], ...] = (
    ("form-preservation", _check_form_preservation),
    ("reflection-involution", _check_reflection_involution),
    ("root-sign-dichotomy", _check_root_sign_dichotomy),
    ("length-consistency", _check_length_consistency),
    ("matsumoto-tits-closure", _check_matsumoto_tits),
    ("commutation-class-bound", _check_class_bound),
    ("class-count-equality-iff-freely-braided", _check_class_equality_iff_fb),
    ("fully-commutative-four-way", _check_fc_four_way),
    ("short-move-root-swap", _check_short_move_root_swap),
    ("short-move-orthogonality-converse", _check_orthogonality_converse),
    ("long-move-root-action", _check_long_move_root_action),
    ("long-move-sum-converse", _check_sum_converse),
    ("inversion-set-word-independence", _check_inversion_set_independence),
    ("consecutive-triple-middle-sum", _check_consecutive_triple_pattern),
    ("signature-injectivity", _check_signature_injectivity),
    ("signature-precedence-reversal", _check_signature_precedence_reversal),
    ("word-class-root-sequence-class-bijection", _check_class_bijection),
    ("close-words-class-representatives", _check_close_words_representatives),
    ("maximal-braid-sequence-unique", _check_maximal_sequence_unique),
    ("close-words-preserve-element", _check_close_words_element),
    ("close-words-preserve-contractedness", _check_close_words_contracted),
    ("braid-deletion-chain", _check_braid_deletion_chain),
    ("deletion-close-words", _check_deletion_close_words),
    ("weak-order-step-laws", _check_weak_order_steps),
    ("growth-table-monotone", _check_growth_monotone),
    ("brute-force-crosscheck", _check_brute_force_crosscheck),
    ("classifier-relabel-invariance", _check_classifier_relabel_invariance),
)


def verify_suite(
    g: CoxeterGraph,
    max_len: int,
    element_budget: int = DEFAULT_ELEMENT_BUDGET,
    word_budget: int = DEFAULT_WORD_BUDGET,
) -> VerifyReport:
    """Run every named structural check over all elements up to ``max_len``.

    A budget overrun is reported per check and does not abort the suite;
    counterexamples are minimal in the canonical order (length, then
    matrix).
    """
    try:
        layers = enumerate_elements(g, max_len, element_budget)
    except BudgetExceededError as exc:
        results = tuple(CheckResult(name, "BUDGET", str(exc)) for name, _ in _CHECKS)
        return VerifyReport(max_len, results)
    elements = tuple(e for length in sorted(layers) for e in layers[length])
    ctx = _Ctx(g, max_len, word_budget, elements)
    results = []
    for name, check in _CHECKS:
        try:
            detail = check(ctx)
        except BudgetExceededError as exc:
            results.append(CheckResult(name, "BUDGET", str(exc)))
        else:
            if detail is None:
                results.append(CheckResult(name, "PASS"))
            else:
                results.append(CheckResult(name, "FAIL", detail))
    return VerifyReport(max_len, tuple(results))
