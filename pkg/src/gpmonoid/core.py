"""Ground types for graph products of monoids.

A graph product is built from a finite simple graph and one monoid per
vertex.  Elements are represented by words whose letters are pairs
(vertex, element of that vertex's monoid); letters at adjacent vertices
commute, adjacent same-vertex letters multiply inside their monoid, and
identity letters vanish.

Two kinds of vertex monoid are supported:

* FiniteMonoid: elements are indices into a name list, multiplication is
  a full table.
* FreeMonoid: elements are strings over a fixed alphabet of
  single-character symbols, multiplication is concatenation.

Everything here is immutable; operations are plain functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union


class GPError(Exception):
    """Base for package errors."""


class GPValidationError(GPError):
    """A structure failed its construction-time checks."""


class GPPreconditionError(GPError):
    """An operation was called outside its stated precondition."""


class GPInternalError(GPError):
    """An internal invariant failed; indicates a bug, maps to exit code 3."""


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..n-1, edges as sorted pairs."""

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise GPValidationError("vertex count must be nonnegative")
        for e in self.edges:
            if not (isinstance(e, tuple) and len(e) == 2):
                raise GPValidationError("edge must be a pair: %r" % (e,))
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GPValidationError("edge %r out of range" % (e,))
            if u == v:
                raise GPValidationError("loop edge %r not allowed" % (e,))
            if u > v:
                raise GPValidationError("edge %r must be sorted" % (e,))

    def adjacent(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges


def make_graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of (u, v) pairs, normalizing order."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise GPValidationError("loop edge (%r, %r) not allowed" % (u, v))
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm))


# ---------------------------------------------------------------------------
# vertex monoids

Element = Union[int, str]  # index into a FiniteMonoid, or a FreeMonoid string


@dataclass(frozen=True)
class FiniteMonoid:
    """Monoid on elements 0..n-1 given by a full multiplication table.

    element_names[i] is the display name of element i; identity is the
    index of the identity.  The table is validated for identity laws and
    associativity at construction (cubic scan, these monoids are tiny).
    """

    element_names: tuple
    identity: int
    table: tuple  # table[i][j] = index of product i*j

    def __post_init__(self):
        n = len(self.element_names)
        if n == 0:
            raise GPValidationError("monoid needs at least one element")
        if len(set(self.element_names)) != n:
            raise GPValidationError("duplicate element names")
        if not (0 <= self.identity < n):
            raise GPValidationError("identity index out of range")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise GPValidationError("table must be %d x %d" % (n, n))
        for row in self.table:
            for x in row:
                if not (0 <= x < n):
                    raise GPValidationError("table entry %r out of range" % (x,))
        e = self.identity
        for i in range(n):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise GPValidationError(
                    "identity law fails at %s" % self.element_names[i])
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    if self.table[ij][k] != self.table[i][self.table[j][k]]:
                        raise GPValidationError(
                            "not associative at (%s,%s,%s)" % (
                                self.element_names[i], self.element_names[j],
                                self.element_names[k]))

    @property
    def size(self) -> int:
        return len(self.element_names)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def is_identity(self, x: int) -> bool:
        return x == self.identity

    def elements(self):
        return range(len(self.element_names))

    def element_key(self, x: int):
        return x

    def format_element(self, x: int) -> str:
        return self.element_names[x]

    def parse_element(self, token: str) -> int:
        try:
            return self.element_names.index(token)
        except ValueError:
            raise GPValidationError("unknown element %r" % (token,)) from None


@dataclass(frozen=True)
class FreeMonoid:
    """Free monoid on a nonempty alphabet of single-character symbols.

    Elements are plain strings over the alphabet; identity is "".
    Symbols are one character each so concatenated element tokens
    (like "xyx") parse unambiguously.
    """

    alphabet: tuple

    def __post_init__(self):
        if not self.alphabet:
            raise GPValidationError("free monoid needs a nonempty alphabet")
        for s in self.alphabet:
            if not (isinstance(s, str) and len(s) == 1):
                raise GPValidationError(
                    "alphabet symbols must be single characters, got %r" % (s,))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise GPValidationError("duplicate alphabet symbols")

    identity = ""

    def mul(self, x: str, y: str) -> str:
        return x + y

    def is_identity(self, x: str) -> bool:
        return x == ""

    def element_key(self, x: str):
        return (len(x), x)

    def format_element(self, x: str) -> str:
        return x

    def parse_element(self, token: str) -> str:
        for ch in token:
            if ch not in self.alphabet:
                raise GPValidationError("symbol %r not in alphabet" % (ch,))
        return token


VertexMonoid = Union[FiniteMonoid, FreeMonoid]


def is_group(m: VertexMonoid) -> bool:
    """True iff every element has a two-sided inverse."""
    if isinstance(m, FreeMonoid):
        return False  # nonempty alphabet, so never a group
    e = m.identity
    for x in m.elements():
        if not any(m.mul(p, x) == e and m.mul(x, p) == e for p in m.elements()):
            return False
    return True


def left_inverse_of(m: VertexMonoid, x: Element) -> Optional[Element]:
    """Least p with p*x = identity, or None if x is not left invertible."""
    if isinstance(m, FreeMonoid):
        return "" if x == "" else None
    for p in m.elements():
        if m.mul(p, x) == m.identity:
            return p
    return None


def vertex_divides(m: VertexMonoid, a: Element, b: Element) -> Optional[Element]:
    """A witness p with p*b = a, or None.

    Finite: least such p by index.  Free: the unique prefix when b is a
    suffix of a.
    """
    if isinstance(m, FreeMonoid):
        if b == "":
            return a
        if a.endswith(b):
            return a[:-len(b)]
        return None
    for p in m.elements():
        if m.mul(p, b) == a:
            return p
    return None


def vertex_ideal_intersection(m: VertexMonoid, a: Element, b: Element):
    """Generators of (M a) intersect (M b) as a left ideal of M.

    Returns a sorted tuple of elements; every member of the intersection
    is left-divisible by one of them, and no listed element is properly
    generated by another (ties broken by element order).
    """
    if isinstance(m, FreeMonoid):
        # M a meets M b iff one of a, b is a suffix of the other.
        if a.endswith(b) or b.endswith(a):
            return (a if len(a) >= len(b) else b,)
        return ()
    sa = {m.mul(p, a) for p in m.elements()}
    sb = {m.mul(q, b) for q in m.elements()}
    common = sorted(sa & sb, key=m.element_key)
    if not common:
        return ()
    # y is generated by z when y = p*z for some p; keep one representative
    # (least element) of each divisibility-maximal class
    gen_by = {y: {z for z in common if vertex_divides(m, y, z) is not None}
              for y in common}
    out = []
    for y in common:
        if all(y in gen_by[z] for z in gen_by[y]):  # nothing properly above y
            cls = [z for z in gen_by[y] if y in gen_by[z]]
            if min(cls, key=m.element_key) == y:
                out.append(y)
    return tuple(out)


def vertex_annihilator(m: VertexMonoid, a: Element):
    """All ordered pairs (s, t), s != t, with s*a = t*a in the vertex monoid."""
    if isinstance(m, FreeMonoid):
        return ()  # free monoids are cancellative
    pairs = []
    for s in m.elements():
        for t in m.elements():
            if s != t and m.mul(s, a) == m.mul(t, a):
                pairs.append((s, t))
    return tuple(pairs)


# ---------------------------------------------------------------------------
# letters, words, contexts


class Letter(NamedTuple):
    vertex: int
    element: Element


Word = tuple  # tuple[Letter, ...]

EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class GPContext:
    """A graph together with one vertex monoid per vertex."""

    graph: Graph
    monoids: tuple  # tuple[VertexMonoid, ...]
    vertex_names: tuple = ()

    def __post_init__(self):
        if len(self.monoids) != self.graph.n:
            raise GPValidationError(
                "need %d monoids, got %d" % (self.graph.n, len(self.monoids)))
        if self.vertex_names == ():
            object.__setattr__(
                self, "vertex_names",
                tuple("v%d" % i for i in range(self.graph.n)))
        if len(self.vertex_names) != self.graph.n:
            raise GPValidationError("vertex name count mismatch")
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise GPValidationError("duplicate vertex names")
        for m in self.monoids:
            if isinstance(m, FiniteMonoid):
                if m.size < 2:
                    raise GPValidationError(
                        "trivial vertex monoid; drop the vertex instead")
            elif not isinstance(m, FreeMonoid):
                raise GPValidationError("unsupported monoid %r" % (m,))

    def adjacent(self, u: int, v: int) -> bool:
        return self.graph.adjacent(u, v)

    def monoid(self, v: int) -> VertexMonoid:
        return self.monoids[v]

    def vertex_index(self, name: str) -> int:
        try:
            return self.vertex_names.index(name)
        except ValueError:
            raise GPValidationError("unknown vertex %r" % (name,)) from None

    def check_letter(self, l: Letter) -> None:
        if not (0 <= l.vertex < self.graph.n):
            raise GPValidationError("letter vertex %r out of range" % (l.vertex,))
        m = self.monoids[l.vertex]
        if isinstance(m, FiniteMonoid):
            if not (isinstance(l.element, int) and 0 <= l.element < m.size):
                raise GPValidationError("bad element %r at vertex %d"
                                        % (l.element, l.vertex))
        else:
            m.parse_element(l.element)

    def is_identity_letter(self, l: Letter) -> bool:
        return self.monoids[l.vertex].is_identity(l.element)

    def letter_key(self, l: Letter):
        return (l.vertex, self.monoids[l.vertex].element_key(l.element))

    def word_key(self, w: Word):
        """Shortlex key: length first, then letterwise keys."""
        return (len(w), tuple(self.letter_key(l) for l in w))

    def format_letter(self, l: Letter) -> str:
        return "%s.%s" % (self.vertex_names[l.vertex],
                          self.monoids[l.vertex].format_element(l.element))

    def format_word(self, w: Word) -> str:
        if not w:
            return "e"
        return " ".join(self.format_letter(l) for l in w)


def support(w: Word):
    """Set of vertices whose letters occur in w."""
    return {l.vertex for l in w}


def strip_identity_letters(ctx: GPContext, w: Word) -> Word:
    return tuple(l for l in w if not ctx.is_identity_letter(l))


def vertex_projection(ctx: GPContext, w: Word, v: int) -> Element:
    """Product of the vertex-v letters of w inside that vertex monoid.

    This is the retraction of the graph product onto the vertex monoid;
    it is invariant under all defining relations.
    """
    m = ctx.monoids[v]
    acc = m.identity
    for l in w:
        if l.vertex == v:
            acc = m.mul(acc, l.element)
    return acc
