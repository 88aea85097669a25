"""Intersections of principal left ideals.

The intersection of two principal left ideals in a graph product is
finitely generated whenever every vertex monoid has that property, and
the generating set is computable: any single common element pins down
the combinatorial skeleton of every common element, after which the
problem falls apart into one vertex-monoid ideal intersection per
matched block position plus a fixed tail word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    FiniteMonoid, FreeMonoid, GPContext, GPInternalError, GPPreconditionError,
    Letter, Word, vertex_ideal_intersection,
)
from .ideals import leq_principal, strip_left_invertible
from .normalform import CanonicalForm, canonical, is_reduced, reduce_word
from .product_reduction import (
    double_shuffle_decompose, factor_common_multiple, reduce_product_traced,
)


def _witness_letters(ctx: GPContext, vertices, words) -> list:
    """Candidate letters for witness search: every non-identity element
    at finite vertices, every factor of an occurring letter at free ones."""
    out = []
    for v in sorted(vertices):
        m = ctx.monoid(v)
        if isinstance(m, FiniteMonoid):
            out.extend(Letter(v, e) for e in m.elements()
                       if not m.is_identity(e))
        else:
            factors = set()
            for word in words:
                for l in word:
                    if l.vertex == v:
                        s = l.element
                        factors.update(s[i:j] for i in range(len(s))
                                       for j in range(i + 1, len(s) + 1))
            out.extend(Letter(v, e)
                       for e in sorted(factors, key=m.element_key))
    return out


def find_intersection_witness(ctx: GPContext, a: Word, b: Word,
                              bound: Optional[int] = None) -> Optional[CanonicalForm]:
    """Shortlex-least element of both ideals among words over the
    occurring vertices, up to the bound; None when none exists there.

    The default bound |standard(a)| + |standard(b)| is the length of the
    canonical common element built from any member of the intersection,
    so for the supported vertex monoids a None decides emptiness.
    """
    if not is_reduced(ctx, a) or not is_reduced(ctx, b):
        raise GPPreconditionError("find_intersection_witness needs reduced words")
    if bound is None:
        bound = (len(strip_left_invertible(ctx, a).standard)
                 + len(strip_left_invertible(ctx, b).standard))
    vertices = {l.vertex for l in a} | {l.vertex for l in b}
    letters = _witness_letters(ctx, vertices, (a, b))
    for n in range(bound + 1):
        hits = []
        for word in itertools.product(letters, repeat=n):
            if not is_reduced(ctx, word):
                continue
            if (leq_principal(ctx, word, a) is not None
                    and leq_principal(ctx, word, b) is not None):
                hits.append(word)
        if hits:
            return canonical(ctx, min(hits, key=ctx.word_key))
    return None


@dataclass(frozen=True)
class GeneratorSet:
    """Finite generating set of an ideal intersection.

    provenance[i] records, for generators[i], the per-position vertex
    intersection elements it was assembled from and the shared tail."""

    generators: tuple   # CanonicalForm, shortlex order, deduplicated
    provenance: tuple   # (x_letters: Word, tail: Word) per generator


def _fronted(tr) -> Word:
    """Rearrange a glue-only traced reduction so the glued letters lead.

    The glued letters commute to the front in move order, giving a word
    whose leading complete block is exactly the glued positions.
    """
    glued = list(tr.func.themap)
    word = tr.modified_tail()
    return tuple(word[p] for p in glued) \
        + tuple(l for i, l in enumerate(word) if i not in set(glued))


def intersect_principal(ctx: GPContext, a: Word, b: Word) -> GeneratorSet:
    """Generating set of the intersection of the two principal left ideals.

    Standardize both generators; search for one common element; trace how
    its two product expressions reduce (glue moves only, since the
    standard parts expose no deletable letters); factor the two traces
    through their common left part; classify the glued blocks against
    each other; and assemble one generator per choice of vertex-level
    intersection generators at the matched positions.
    """
    if not is_reduced(ctx, a) or not is_reduced(ctx, b):
        raise GPPreconditionError("intersect_principal needs reduced words")
    std_a = strip_left_invertible(ctx, a).standard
    std_b = strip_left_invertible(ctx, b).standard
    witness = find_intersection_witness(ctx, std_a, std_b)
    if witness is None:
        return GeneratorSet((), ())
    z = witness.word()
    s = leq_principal(ctx, z, std_a)
    t = leq_principal(ctx, z, std_b)
    if s is None or t is None:
        raise GPInternalError("witness fails its own divisibility")
    tr_a = reduce_product_traced(ctx, s, std_a)
    tr_b = reduce_product_traced(ctx, t, std_b)
    if tr_a.func.delete or tr_b.func.delete:
        raise GPInternalError("standard part absorbed a deletion")
    m_glue = tr_a.func.moves
    n_glue = tr_b.func.moves
    c_word = _fronted(tr_a)
    d_word = _fronted(tr_b)
    raw_c = tuple(std_a[p] for p in tr_a.func.themap) \
        + tuple(l for i, l in enumerate(std_a)
                if i not in set(tr_a.func.themap))
    raw_d = tuple(std_b[p] for p in tr_b.func.themap) \
        + tuple(l for i, l in enumerate(std_b)
                if i not in set(tr_b.func.themap))
    fact = factor_common_multiple(ctx, tr_a.surviving_prefix(), c_word,
                                  tr_b.surviving_prefix(), d_word)
    dsh = double_shuffle_decompose(ctx, c_word, d_word,
                                   fact.a_prime, fact.b_prime,
                                   block_a=m_glue, block_b=n_glue)
    w_prime = tuple(raw_c[i] for i in dsh.j_a) \
        + tuple(raw_d[j] for j in dsh.j_b) + dsh.tail
    choice_sets = []
    for i, j in dsh.sigma:
        m = ctx.monoid(c_word[i].vertex)
        gens = vertex_ideal_intersection(m, raw_c[i].element, raw_d[j].element)
        if not gens:
            raise GPInternalError("matched positions with empty vertex "
                                  "intersection despite a common element")
        choice_sets.append([Letter(c_word[i].vertex, x) for x in gens])
    seen = {}
    for combo in itertools.product(*choice_sets):
        gen_word = reduce_word(ctx, tuple(combo) + w_prime)
        form = canonical(ctx, gen_word)
        if form not in seen:
            seen[form] = (tuple(combo), w_prime)
    for form in seen:
        g = form.word()
        if (leq_principal(ctx, g, a) is None
                or leq_principal(ctx, g, b) is None):
            raise GPInternalError("constructed generator escapes the ideals")
    ordered = sorted(seen, key=lambda f: ctx.word_key(f.word()))
    return GeneratorSet(tuple(ordered), tuple(seen[f] for f in ordered))


@dataclass(frozen=True)
class LcmVerdict:
    """Shape of one ideal intersection: empty, principal (with its
    generator), or witnessed non-principal."""

    kind: str                               # empty | principal | not_principal
    generator: Optional[CanonicalForm]
    certificate: Optional[tuple]            # incomparable generator pair


def lcm_check(ctx: GPContext, a: Word, b: Word) -> LcmVerdict:
    """Classify the intersection of the two principal left ideals."""
    gens = intersect_principal(ctx, a, b).generators
    if not gens:
        return LcmVerdict("empty", None, None)
    for g in gens:
        if all(leq_principal(ctx, h.word(), g.word()) is not None
               for h in gens):
            return LcmVerdict("principal", g, None)
    for g, h in itertools.combinations(gens, 2):
        if (leq_principal(ctx, g.word(), h.word()) is None
                and leq_principal(ctx, h.word(), g.word()) is None):
            return LcmVerdict("not_principal", None, (g, h))
    raise GPInternalError("no dominating generator yet no incomparable pair")
