"""Principal left ideals: standard forms, divisibility, chain condition.

The principal left ideal of an element is everything it left-divides
into; comparing two of them reduces to a finite amount of vertex-monoid
arithmetic once the divisor is in standard form (no left-invertible
letter in its first block).  Left-invertible letters contribute nothing
to the ideal, so they are stripped off first and only re-enter when a
witness has to be produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    FiniteMonoid, GPContext, GPInternalError, Letter, Word,
    left_inverse_of, vertex_divides,
)
from .normalform import canonical_word, equal, foata_left, is_reduced, reduce_word


@dataclass(frozen=True)
class StandardForm:
    """A word split as (left invertible prefix) * (standard part)."""

    prefix: Word
    standard: Word

    def word(self) -> Word:
        return self.prefix + self.standard


def strip_left_invertible(ctx: GPContext, w: Word) -> StandardForm:
    """Peel left-invertible first-block letters until none remain.

    Each round takes the current first Foata block, moves its
    left-invertible letters (in vertex order) into the prefix, and
    recomputes.  The element is unchanged: prefix * standard multiplies
    back to w.
    """
    rest = reduce_word(ctx, w)
    prefix: list = []
    while rest:
        block = foata_left(ctx, rest).blocks[0]
        stripped = [l for l in block
                    if left_inverse_of(ctx.monoid(l.vertex), l.element)
                    is not None]
        if not stripped:
            break
        prefix.extend(stripped)
        keep = set(stripped)
        rest = reduce_word(ctx, tuple(l for l in block if l not in keep)
                           + rest[len(block):])
    out = StandardForm(tuple(prefix), rest)
    if not is_reduced(ctx, out.word()) or not equal(ctx, out.word(), w):
        raise GPInternalError("standard form does not multiply back")
    return out


def _strip_witness_tail(ctx: GPContext, sf: StandardForm) -> Word:
    """Word p with [p * original] = [standard part].

    Left inverses of the prefix letters, applied innermost first: if the
    rounds stripped x1 then x2, the standard part is inv(x2)*inv(x1)*w.
    """
    tail = []
    for l in reversed(sf.prefix):
        inv = left_inverse_of(ctx.monoid(l.vertex), l.element)
        if inv is None:
            raise GPInternalError("prefix letter is not left invertible")
        if not ctx.monoid(l.vertex).is_identity(inv):
            tail.append(Letter(l.vertex, inv))
    return tuple(tail)


def _peel_last_at_vertex(ctx: GPContext, z: Word, vertex: int) -> Optional[int]:
    """Position of the last letter of z at the vertex, provided every
    later letter commutes past it; None when absent or blocked."""
    for i in range(len(z) - 1, -1, -1):
        if z[i].vertex == vertex:
            if all(ctx.adjacent(vertex, z[j].vertex)
                   for j in range(i + 1, len(z))):
                return i
            return None
        if not ctx.adjacent(vertex, z[i].vertex):
            return None
    return None


def leq_principal(ctx: GPContext, u: Word, v: Word) -> Optional[Word]:
    """Witness c with [c * v] = [u] when the ideal of u sits inside the
    ideal of v; None otherwise.

    The divisor is replaced by its standard part (same ideal).  Any
    product c * standard keeps the standard part's letters beyond the
    first block untouched at the back of each vertex track, and hits the
    first-block letters only by left multiplication inside the vertex
    monoid.  So: peel the post-block suffix off the right of u exactly,
    then divide vertexwise against the first block, and whatever is left
    over is the witness core.
    """
    sf = strip_left_invertible(ctx, v)
    std = sf.standard
    adjust = _strip_witness_tail(ctx, sf)
    z = list(canonical_word(ctx, u))
    if not std:
        witness = reduce_word(ctx, tuple(z) + adjust)
        _check_witness(ctx, witness, v, u)
        return witness
    block_len = len(foata_left(ctx, std).blocks[0])
    # suffix letters must sit unchanged at the back of u, vertex by vertex
    for l in reversed(std[block_len:]):
        i = _peel_last_at_vertex(ctx, tuple(z), l.vertex)
        if i is None or z[i].element != l.element:
            return None
        del z[i]
    # first-block letters absorb left factors inside their own monoid
    divisions = []
    for l in std[:block_len]:
        i = _peel_last_at_vertex(ctx, tuple(z), l.vertex)
        if i is None:
            return None
        q = vertex_divides(ctx.monoid(l.vertex), z[i].element, l.element)
        if q is None:
            return None
        if not ctx.monoid(l.vertex).is_identity(q):
            divisions.append(Letter(l.vertex, q))
        del z[i]
    witness = reduce_word(ctx, tuple(z) + tuple(divisions) + adjust)
    _check_witness(ctx, witness, v, u)
    return witness


def _check_witness(ctx: GPContext, c: Word, v: Word, u: Word) -> None:
    if not equal(ctx, c + tuple(reduce_word(ctx, v)), u):
        raise GPInternalError("divisibility witness fails to multiply back")


def eq_principal(ctx: GPContext, u: Word, v: Word) -> bool:
    """Same principal left ideal in both directions."""
    return (leq_principal(ctx, u, v) is not None
            and leq_principal(ctx, v, u) is not None)


def count_principal_left_ideals(m: FiniteMonoid) -> int:
    """Number of distinct sets M*x for a finite monoid."""
    ideals = set()
    for x in m.elements():
        ideals.add(frozenset(m.mul(p, x) for p in m.elements()))
    return len(ideals)


@dataclass(frozen=True)
class AccplReport:
    """Ascending chains of principal left ideals stabilize iff they do in
    every vertex monoid; finite vertices also report their ideal count."""

    overall: bool
    per_vertex: tuple           # booleans
    ideal_counts: tuple         # int for finite vertices, None for free


def accpl_report(ctx: GPContext) -> AccplReport:
    verdicts = []
    counts = []
    for m in ctx.monoids:
        if isinstance(m, FiniteMonoid):
            verdicts.append(True)
            counts.append(count_principal_left_ideals(m))
        else:
            # free: proper left division strictly shortens the word
            verdicts.append(True)
            counts.append(None)
    return AccplReport(all(verdicts), tuple(verdicts), tuple(counts))
