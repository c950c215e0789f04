"""Simply laced Coxeter graphs and their exact reflection representation.

A Coxeter graph is a vertex list plus a set of undirected edges: an edge
means the two generators satisfy a braid relation of order three, a
non-edge means they commute.  Roots are integer coefficient vectors over
the simple-root basis, group elements are the integer matrices of their
action on that basis (stored column-wise, column ``j`` = image of the
``j``-th simple root), and the symmetric form takes exact values in
``fractions.Fraction``.  Nothing here ever touches floating point, so the
machinery works unchanged for infinite groups; enumeration is bounded by
explicit budgets instead.

All values are immutable after construction and safe to share.

>>> g = parse_graph('{"vertices": ["1", "2"], "edges": [["1", "2"]]}')
>>> reflect(g, "1", simple_root(g, "2"))
(1, 1)
>>> element_of(g, ("1", "2", "1")) == element_of(g, ("2", "1", "2"))
True
>>> element_of(g, ("1", "1")).length
0
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Letter = str
Word = tuple[Letter, ...]
Root = tuple[int, ...]
Columns = tuple[Root, ...]

DEFAULT_ELEMENT_BUDGET = 10**6


class GraphError(ValueError):
    """Base class for graph-document validation failures."""


class MalformedGraphError(GraphError):
    """The document is not a well-formed graph description."""


class DuplicateVertexError(GraphError):
    """A vertex identifier occurs twice."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class UnknownVertexError(GraphError):
    """A vertex identifier is not part of the graph."""


class BudgetExceededError(RuntimeError):
    """An enumeration outgrew its configured resource budget."""


@dataclass(frozen=True)
class CoxeterGraph:
    """Vertex list plus braid edges; a non-edge between distinct vertices
    means the generators commute.

    Vertex order is significant: it fixes the coordinate order of roots,
    the row/column order of matrices and every lexicographic tie-break.
    """

    vertices: tuple[Letter, ...]
    edges: frozenset[tuple[Letter, Letter]]

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        seen: set[Letter] = set()
        for v in vertices:
            if v in seen:
                raise DuplicateVertexError(f"duplicate vertex {v!r}")
            seen.add(v)
        order = {v: k for k, v in enumerate(vertices)}
        normalized: set[tuple[Letter, Letter]] = set()
        for a, b in self.edges:
            if a not in order:
                raise UnknownVertexError(f"edge endpoint {a!r} is not a vertex")
            if b not in order:
                raise UnknownVertexError(f"edge endpoint {b!r} is not a vertex")
            if a == b:
                raise SelfLoopError(f"self-loop at vertex {a!r}")
            if order[a] > order[b]:
                a, b = b, a
            normalized.add((a, b))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def rank(self) -> int:
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[Letter, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def _adjacent(self) -> frozenset[tuple[Letter, Letter]]:
        sym = set()
        for a, b in self.edges:
            sym.add((a, b))
            sym.add((b, a))
        return frozenset(sym)

    @cached_property
    def _neighbor_indices(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            ia, ib = self._index[a], self._index[b]
            nbrs[ia].append(ib)
            nbrs[ib].append(ia)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def identity_columns(self) -> Columns:
        n = self.rank
        return tuple(
            tuple(1 if i == j else 0 for i in range(n)) for j in range(n)
        )

    def index(self, v: Letter) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v!r}") from None

    def are_adjacent(self, a: Letter, b: Letter) -> bool:
        return (a, b) in self._adjacent

    def m(self, i: Letter, j: Letter) -> int:
        """Coxeter matrix entry: 1 on the diagonal, 3 on edges, 2 otherwise."""
        self.index(i)
        self.index(j)
        if i == j:
            return 1
        return 3 if (i, j) in self._adjacent else 2


def parse_graph(text: str) -> CoxeterGraph:
    """Parse the JSON graph document ``{"vertices": [...], "edges": [[a, b], ...]}``.

    Vertex order is the file order.  Raises a distinct :class:`GraphError`
    subclass for each failure mode (malformed document, duplicate vertex,
    self-loop, unknown edge endpoint).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedGraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedGraphError("graph document must be a JSON object")
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise MalformedGraphError('"vertices" must be a list of strings')
    if not isinstance(edges, list):
        raise MalformedGraphError('"edges" must be a list of vertex pairs')
    pairs: list[tuple[Letter, Letter]] = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, str) for v in e)):
            raise MalformedGraphError(f"edge {e!r} is not a pair of vertex identifiers")
        pairs.append((e[0], e[1]))
    return CoxeterGraph(tuple(vertices), frozenset(pairs))


def graph_to_json(g: CoxeterGraph) -> str:
    """Serialize back to the document format, deterministically."""
    order = g._index
    edges = sorted(g.edges, key=lambda e: (order[e[0]], order[e[1]]))
    return json.dumps(
        {"vertices": list(g.vertices), "edges": [list(e) for e in edges]},
        separators=(",", ":"),
    )


# ---------------------------------------------------------------------------
# Roots


def simple_root(g: CoxeterGraph, i: Letter) -> Root:
    k = g.index(i)
    return tuple(1 if j == k else 0 for j in range(g.rank))


def is_positive_root(r: Root) -> bool:
    return any(c > 0 for c in r) and all(c >= 0 for c in r)


def is_negative_root(r: Root) -> bool:
    return any(c < 0 for c in r) and all(c <= 0 for c in r)


def validate_root(g: CoxeterGraph, r: Root) -> Root:
    """Reject vectors of the wrong dimension or with mixed signs."""
    r = tuple(r)
    if len(r) != g.rank:
        raise ValueError(f"root {r!r} has dimension {len(r)}, expected {g.rank}")
    if not (is_positive_root(r) or is_negative_root(r)):
        raise ValueError(f"{r!r} is not a root: coefficients must be uniformly signed and not all zero")
    return r


def height(r: Root) -> int:
    """Sum of the simple-root coefficients; negative for negative roots."""
    return sum(r)


def coxeter_form(g: CoxeterGraph, i: Letter, j: Letter) -> Fraction:
    """Form value on a pair of simple roots: 1, 0 or -1/2."""
    m = g.m(i, j)
    if m == 1:
        return Fraction(1)
    return Fraction(0) if m == 2 else Fraction(-1, 2)


def _doubled_form(g: CoxeterGraph, r1: Root, r2: Root) -> int:
    # 2*B(r1, r2) is an exact integer in the simply laced case.
    total = 2 * sum(a * b for a, b in zip(r1, r2))
    for a, b in g.edges:
        ia, ib = g._index[a], g._index[b]
        total -= r1[ia] * r2[ib] + r1[ib] * r2[ia]
    return total


def form_value(g: CoxeterGraph, r1: Root, r2: Root) -> Fraction:
    """Bilinear extension of the form to arbitrary integer vectors."""
    return Fraction(_doubled_form(g, r1, r2), 2)


def roots_orthogonal(g: CoxeterGraph, r1: Root, r2: Root) -> bool:
    return _doubled_form(g, r1, r2) == 0


def reflect(g: CoxeterGraph, i: Letter, r: Root) -> Root:
    """Simple reflection applied to a root, in exact integer arithmetic.

    Subtracts ``2B(r, alpha_i)`` times the simple root, where the doubled
    form value is ``2 r_i - sum of r_j over neighbours j``.
    """
    k = g.index(i)
    r = validate_root(g, r)
    c = 2 * r[k] - sum(r[j] for j in g._neighbor_indices[k])
    if c == 0:
        return r
    return tuple(x - c if j == k else x for j, x in enumerate(r))


# ---------------------------------------------------------------------------
# Group elements


@dataclass(frozen=True)
class GroupElement:
    """Canonical exact representation: the matrix of the action on the
    simple-root basis, stored as a tuple of columns, plus the cached length.

    Equality and hashing use the matrix alone.
    """

    columns: Columns
    length: int = field(compare=False)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Row-major matrix, as used by the JSON interfaces."""
        n = len(self.columns)
        return tuple(tuple(self.columns[j][i] for j in range(n)) for i in range(n))

    def apply(self, r: Root) -> Root:
        """Image of an integer vector under the element."""
        n = len(self.columns)
        if len(r) != n:
            raise ValueError(f"vector {r!r} has dimension {len(r)}, expected {n}")
        out = [0] * n
        for j, c in enumerate(r):
            if c:
                col = self.columns[j]
                for i in range(n):
                    out[i] += c * col[i]
        return tuple(out)

    def is_identity(self) -> bool:
        return self.length == 0


def _mul_gen(g: CoxeterGraph, cols: Columns, k: int) -> Columns:
    # Right multiplication by the k-th generator, column arithmetic only:
    # column k negates, neighbouring columns gain the old column k.
    col_k = cols[k]
    new = list(cols)
    new[k] = tuple(-x for x in col_k)
    for j in g._neighbor_indices[k]:
        new[j] = tuple(a + b for a, b in zip(cols[j], col_k))
    return tuple(new)


def _column_negative(col: Root) -> bool:
    # Columns of genuine group matrices are roots, so one negative
    # coefficient already decides the sign.
    return any(x < 0 for x in col)


def _descent_index(g: CoxeterGraph, cols: Columns) -> int | None:
    for k in range(len(cols)):
        if _column_negative(cols[k]):
            return k
    return None


def _length_of(g: CoxeterGraph, cols: Columns) -> int:
    # Greedy descent: strip one length at a time until the identity.
    steps = 0
    while True:
        k = _descent_index(g, cols)
        if k is None:
            return steps
        cols = _mul_gen(g, cols, k)
        steps += 1


def identity_element(g: CoxeterGraph) -> GroupElement:
    return GroupElement(g.identity_columns, 0)


def element_of(g: CoxeterGraph, word: Word) -> GroupElement:
    """Product of the generators named by the word, first letter outermost.

    The length field is computed by greedy descent, so it is the true
    Coxeter length even when the word is not reduced.
    """
    index = g._index
    cols = g.identity_columns
    for letter in word:
        try:
            k = index[letter]
        except KeyError:
            raise UnknownVertexError(f"unknown letter {letter!r}") from None
        cols = _mul_gen(g, cols, k)
    return GroupElement(cols, _length_of(g, cols))


def multiply_generator(g: CoxeterGraph, e: GroupElement, i: Letter) -> GroupElement:
    """Right multiplication by one generator; length moves by exactly one."""
    k = g.index(i)
    delta = -1 if _column_negative(e.columns[k]) else 1
    return GroupElement(_mul_gen(g, e.columns, k), e.length + delta)


def element_word(g: CoxeterGraph, e: GroupElement) -> Word:
    """One reduced word for the element, by repeated descent stripping.

    Deterministic: always takes the first descent in vertex order.
    """
    cols = e.columns
    suffix: list[Letter] = []
    while True:
        k = _descent_index(g, cols)
        if k is None:
            break
        suffix.append(g.vertices[k])
        cols = _mul_gen(g, cols, k)
    return tuple(reversed(suffix))


def word_root_entries(g: CoxeterGraph, word: Word) -> tuple[Root, ...]:
    """The suffix-reflection root entries attached to a word.

    Entry ``l`` (0-based) is the image of the simple root of the letter at
    position ``n-1-l`` under the reflections of the letters to its right,
    applied right to left.  For a reduced word these are exactly the
    positive roots inverted by the element, in root-sequence order; a
    non-reduced word produces at least one negative entry.
    """
    index = g._index
    cols = g.identity_columns
    out: list[Root] = []
    for letter in reversed(word):
        try:
            k = index[letter]
        except KeyError:
            raise UnknownVertexError(f"unknown letter {letter!r}") from None
        out.append(cols[k])
        cols = _mul_gen(g, cols, k)
    return tuple(out)


def enumerate_elements(
    g: CoxeterGraph, max_len: int, budget: int = DEFAULT_ELEMENT_BUDGET
) -> dict[int, tuple[GroupElement, ...]]:
    """All elements of length at most ``max_len``, layered by length.

    Breadth-first search in the right weak order keeping only
    length-increasing steps, so only the requested ball is ever visited;
    this terminates for infinite groups too.  Layers are deduplicated and
    sorted by matrix, which fixes the canonical enumeration order used by
    every downstream report.
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    layers: dict[int, tuple[GroupElement, ...]] = {}
    current: set[GroupElement] = {identity_element(g)}
    total = 1
    if total > budget:
        raise BudgetExceededError(f"element budget {budget} exceeded")
    for length in range(max_len + 1):
        layers[length] = tuple(sorted(current, key=lambda e: e.columns))
        if length == max_len:
            break
        nxt: set[GroupElement] = set()
        for e in current:
            cols = e.columns
            for k in range(g.rank):
                if not _column_negative(cols[k]):
                    nxt.add(GroupElement(_mul_gen(g, cols, k), length + 1))
        total += len(nxt)
        if total > budget:
            raise BudgetExceededError(f"element budget {budget} exceeded")
        current = nxt
    return layers
