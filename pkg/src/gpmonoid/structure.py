"""Graph-level structure decisions for graph products.

Three questions about the pair (graph, vertex monoids) are answered
here: whether the graph is relatively complete (every non-edge pair of
vertices is either a pair of groups or the one allowed two-element
exceptional pair), whether the product is weakly left noetherian, and
how the product splits as a direct product of a free product of two
two-element monoids, a direct product of the remaining non-group
vertex monoids, and a graph product of groups.

The bipartite splitting witness is constructive: BipartiteSplit.split
maps a word to its two restriction canonical forms and join maps back.

A coherency report is also produced: the product is weakly left
coherent exactly when every vertex monoid is left ideal Howson and
finitely left equated, which holds for both supported vertex families;
sample word pairs get explicit generator sets as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .core import (
    FiniteMonoid,
    FreeMonoid,
    GPContext,
    GPInternalError,
    GPPreconditionError,
    Letter,
    VertexMonoid,
    Word,
    is_group,
    make_graph,
    vertex_divides,
    vertex_ideal_intersection,
)
from .normalform import CanonicalForm, canonical, reduce_word
from .howson import GeneratorSet, intersect_principal
from .annihilator import PairSet, annihilator_generators


def vertex_wln(m: VertexMonoid) -> bool:
    """Whether a single vertex monoid is weakly left noetherian.

    Finite monoids always are.  A free monoid on one symbol is too
    (its left ideals are determined by a single shortest suffix), but
    with two symbols x, y the elements x y^n x form an infinite
    antichain under the suffix order, so the left ideal they generate
    has no finite generating set.
    """
    if isinstance(m, FiniteMonoid):
        return True
    return len(m.alphabet) <= 1


def _vertex_size(m: VertexMonoid) -> Optional[int]:
    return m.size if isinstance(m, FiniteMonoid) else None


def is_relatively_complete(ctx: GPContext):
    """Check every non-edge pair of vertices against the two allowed shapes.

    A non-edge (a, b) is acceptable when both vertex monoids are groups,
    or when both have exactly two elements (at least one not a group)
    and both endpoints are adjacent to every other vertex.  At most one
    pair of the second kind may exist.

    Returns (ok, special_pair, violations) where special_pair is the
    unique exceptional pair or None and violations is a tuple of
    ((a, b), reason) entries.
    """
    special = []
    violations = []
    n = ctx.graph.n
    for a in range(n):
        for b in range(a + 1, n):
            if ctx.adjacent(a, b):
                continue
            ma, mb = ctx.monoid(a), ctx.monoid(b)
            if is_group(ma) and is_group(mb):
                continue
            if _vertex_size(ma) != 2 or _vertex_size(mb) != 2:
                violations.append(
                    ((a, b),
                     "non-edge with a non-group needs both monoids of size 2"))
                continue
            missing = [c for c in range(n) if c not in (a, b)
                       and not (ctx.adjacent(a, c) and ctx.adjacent(b, c))]
            if missing:
                violations.append(
                    ((a, b), "pair not adjacent to vertex %s"
                     % ctx.vertex_names[missing[0]]))
                continue
            special.append((a, b))
    if len(special) > 1:
        for p in special[1:]:
            violations.append(
                (p, "second two-element non-edge pair; only one allowed"))
    ok = not violations
    pair = special[0] if len(special) == 1 else None
    return ok, pair, tuple(violations)


@dataclass(frozen=True)
class WlnReport:
    """Weak left noetherianity verdict with the supporting classification.

    overall holds iff the graph is relatively complete and every vertex
    monoid is weakly left noetherian.  The graph is finite, so the
    further requirement of finitely many non-group vertices is always
    met; the non-group vertex set is recorded anyway.
    """

    overall: bool
    relatively_complete: bool
    special_pair: Optional[Tuple[int, int]]
    violations: tuple  # ((a, b), reason) per offending non-edge pair
    non_group_vertices: tuple
    vertex_wln: tuple  # flag per vertex, graph order


def decide_wln(ctx: GPContext) -> WlnReport:
    ok, pair, violations = is_relatively_complete(ctx)
    flags = tuple(vertex_wln(m) for m in ctx.monoids)
    non_groups = tuple(v for v in range(ctx.graph.n)
                       if not is_group(ctx.monoid(v)))
    return WlnReport(
        overall=ok and all(flags),
        relatively_complete=ok,
        special_pair=pair,
        violations=violations,
        non_group_vertices=non_groups,
        vertex_wln=flags)


# ---------------------------------------------------------------------------
# bipartite splitting


def _induced_context(ctx: GPContext, verts) -> GPContext:
    """Sub-context on the given parent vertices, reindexed from 0."""
    verts = tuple(verts)
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in ctx.graph.edges
             if u in pos and v in pos]
    return GPContext(
        graph=make_graph(len(verts), edges),
        monoids=tuple(ctx.monoids[v] for v in verts),
        vertex_names=tuple(ctx.vertex_names[v] for v in verts))


@dataclass(frozen=True)
class BipartiteSplit:
    """Direct-product splitting along a bipartition with all cross edges.

    left_vertices and right_vertices map new vertex indices back to
    parent indices.  split is the isomorphism onto the product of the
    two sub-products; join is its inverse.
    """

    parent: GPContext
    left: GPContext
    right: GPContext
    left_vertices: tuple
    right_vertices: tuple

    def split(self, w: Word) -> Tuple[CanonicalForm, CanonicalForm]:
        """Canonical forms of the two vertex-class restrictions of w.

        Well defined on elements: every defining relation either stays
        inside one class or swaps letters across the classes, and the
        latter moves leave both restrictions untouched.
        """
        lpos = {v: i for i, v in enumerate(self.left_vertices)}
        rpos = {v: i for i, v in enumerate(self.right_vertices)}
        wl, wr = [], []
        for l in w:
            if l.vertex in lpos:
                wl.append(Letter(lpos[l.vertex], l.element))
            else:
                wr.append(Letter(rpos[l.vertex], l.element))
        return (canonical(self.left, tuple(wl)),
                canonical(self.right, tuple(wr)))

    def join(self, cl: CanonicalForm, cr: CanonicalForm) -> CanonicalForm:
        """Parent element carrying the given pair; inverse of split."""
        w = [Letter(self.left_vertices[l.vertex], l.element)
             for l in cl.word()]
        w += [Letter(self.right_vertices[l.vertex], l.element)
              for l in cr.word()]
        return canonical(self.parent, tuple(w))


def split_bipartite(ctx: GPContext, v1) -> BipartiteSplit:
    """Split ctx along the bipartition (v1, complement).

    Every cross pair must be an edge; the first missing one is reported.
    """
    chosen = sorted(set(v1))
    for v in chosen:
        if not (0 <= v < ctx.graph.n):
            raise GPPreconditionError("vertex %r out of range" % (v,))
    rest = [v for v in range(ctx.graph.n) if v not in set(chosen)]
    for a in chosen:
        for b in rest:
            if not ctx.adjacent(a, b):
                raise GPPreconditionError(
                    "cross pair (%s, %s) is not an edge"
                    % (ctx.vertex_names[a], ctx.vertex_names[b]))
    return BipartiteSplit(
        parent=ctx,
        left=_induced_context(ctx, chosen),
        right=_induced_context(ctx, rest),
        left_vertices=tuple(chosen),
        right_vertices=tuple(rest))


# ---------------------------------------------------------------------------
# three-way decomposition


@dataclass(frozen=True)
class DecompositionReport:
    """Partition of the vertex set realizing the direct-product splitting.

    parts are disjoint vertex tuples covering all vertices; kinds gives
    the role of each part: "free-pair" for the exceptional non-edge
    pair, "restricted-direct" for the remaining non-group vertices
    (pairwise adjacent, so a plain direct product), "group-product"
    for the vertices whose monoids are groups.  Every cross-part vertex
    pair is an edge.
    """

    parts: tuple
    kinds: tuple


def direct4_partition(ctx: GPContext) -> DecompositionReport:
    """Three-way decomposition of a relatively complete context.

    The free-pair part is omitted when no exceptional pair exists; the
    other two parts are always present, possibly empty.
    """
    ok, pair, violations = is_relatively_complete(ctx)
    if not ok:
        (a, b), reason = violations[0]
        raise GPPreconditionError(
            "not relatively complete: (%s, %s): %s"
            % (ctx.vertex_names[a], ctx.vertex_names[b], reason))
    v1 = pair if pair is not None else ()
    v2 = tuple(v for v in range(ctx.graph.n)
               if not is_group(ctx.monoid(v)) and v not in v1)
    v3 = tuple(v for v in range(ctx.graph.n)
               if v not in v1 and v not in v2)
    # both follow from relative completeness; a failure here is a bug
    for a, b in combinations(v2, 2):
        if not ctx.adjacent(a, b):
            raise GPInternalError(
                "non-group vertices %d, %d not adjacent" % (a, b))
    if pair is not None:
        parts = (v1, v2, v3)
        kinds = ("free-pair", "restricted-direct", "group-product")
    else:
        parts = (v2, v3)
        kinds = ("restricted-direct", "group-product")
    for p, q in combinations(parts, 2):
        for a in p:
            for b in q:
                if not ctx.adjacent(a, b):
                    raise GPInternalError(
                        "cross-part pair (%d, %d) not an edge" % (a, b))
    return DecompositionReport(parts=parts, kinds=kinds)


# ---------------------------------------------------------------------------
# coherency


def _vertex_howson(m: VertexMonoid) -> bool:
    """Left ideal Howson check for one vertex monoid.

    Free monoids: two principal left ideals meet iff one generator is a
    suffix of the other, and then the longer one generates the whole
    intersection.  Finite monoids: verified exhaustively by covering
    each pairwise intersection with its computed generator set.
    """
    if isinstance(m, FreeMonoid):
        return True
    for a in m.elements():
        ia = {m.mul(p, a) for p in m.elements()}
        for b in m.elements():
            both = ia & {m.mul(q, b) for q in m.elements()}
            gens = vertex_ideal_intersection(m, a, b)
            if not all(any(vertex_divides(m, x, g) is not None for g in gens)
                       for x in both):
                return False
    return True


def _vertex_fle(m: VertexMonoid) -> bool:
    """Finitely left equated check for one vertex monoid."""
    if isinstance(m, FreeMonoid):
        return True  # cancellative: s*a = t*a forces s = t
    return True  # finite monoid: every left congruence has finitely many pairs


@dataclass(frozen=True)
class VertexCoherency:
    vertex: int
    howson: bool
    fle: bool


@dataclass(frozen=True)
class CoherencyEvidence:
    """Constructive evidence for one sample pair of elements."""

    left: Word
    right: Word
    intersection: GeneratorSet
    left_annihilator: PairSet
    right_annihilator: PairSet


@dataclass(frozen=True)
class CoherencyReport:
    """Weak left coherency verdict.

    overall is the conjunction of the per-vertex Howson and finitely
    left equated verdicts; evidence holds the computed generator sets
    for each sample word pair.
    """

    overall: bool
    per_vertex: tuple
    evidence: tuple


def coherency_report(ctx: GPContext, sample_words=()) -> CoherencyReport:
    per_vertex = tuple(
        VertexCoherency(v, _vertex_howson(m), _vertex_fle(m))
        for v, m in enumerate(ctx.monoids))
    words = [reduce_word(ctx, tuple(w)) for w in sample_words]
    basis = [annihilator_generators(ctx, w) for w in words]
    evidence = []
    for i, j in combinations(range(len(words)), 2):
        evidence.append(CoherencyEvidence(
            left=words[i],
            right=words[j],
            intersection=intersect_principal(ctx, words[i], words[j]),
            left_annihilator=basis[i],
            right_annihilator=basis[j]))
    return CoherencyReport(
        overall=all(pc.howson and pc.fle for pc in per_vertex),
        per_vertex=per_vertex,
        evidence=tuple(evidence))
