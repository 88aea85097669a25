"""Reduced words, shuffles, and the left Foata normal form.

A word is reduced when it has no identity letters and any two letters at
the same vertex are separated by a letter at a non-adjacent vertex
(otherwise they could be brought together and multiplied).  Two reduced
words represent the same element of the graph product exactly when one
can be shuffled into the other by swapping adjacent letters at adjacent
vertices.

The canonical form groups a reduced word into blocks: block 1 holds the
letters that commute to the front, and each later block holds the
letters that commute to the front once the earlier blocks are removed.
Each block has at most one letter per vertex, the vertices in a block
are pairwise adjacent, and every vertex in block i+1 fails to be
adjacent to some vertex in block i.  Sorting each block by vertex makes
the form unique, which settles the word problem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GPContext, GPPreconditionError, GPValidationError, Letter, Word,
    strip_identity_letters,
)


def is_reduced(ctx: GPContext, w: Word) -> bool:
    """No identity letters; equal-vertex letters have a blocking letter between."""
    for l in w:
        ctx.check_letter(l)
        if ctx.is_identity_letter(l):
            return False
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[i].vertex != w[j].vertex:
                continue
            if not any(not ctx.adjacent(w[k].vertex, w[i].vertex)
                       for k in range(i + 1, j)):
                return False
    return True


def reduce_word(ctx: GPContext, w: Word) -> Word:
    """A reduced word representing the same element as w.

    Letters are prepended right to left onto a reduced accumulator.  An
    incoming letter p either reaches the leftmost accumulator letter at
    its own vertex whose predecessors all commute with p (then the two
    multiply in the vertex monoid: the result replaces that letter, or
    is dropped if it is the identity), or no such letter exists and p is
    prepended as-is.
    """
    acc: list = []
    for p in reversed(w):
        ctx.check_letter(p)
        if ctx.is_identity_letter(p):
            continue
        target = -1
        for k, q in enumerate(acc):
            if q.vertex == p.vertex:
                target = k
                break
            if not ctx.adjacent(p.vertex, q.vertex):
                break
        if target < 0:
            acc.insert(0, p)
            continue
        m = ctx.monoid(p.vertex)
        prod = m.mul(p.element, acc[target].element)
        if m.is_identity(prod):
            del acc[target]
        else:
            acc[target] = Letter(p.vertex, prod)
    return tuple(acc)


def shuffle_valid(ctx: GPContext, x: Word, sigma) -> bool:
    """Whether permuting reduced x by sigma is a legal shuffle.

    sigma[i] is the index into x of the letter placed at position i of
    the permuted word.  The permutation is legal iff every inverted pair
    of letters sits at adjacent vertices.
    """
    n = len(x)
    if sorted(sigma) != list(range(n)):
        raise GPPreconditionError("sigma is not a permutation of the word")
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:  # letters swapped past each other
                if not ctx.adjacent(x[sigma[i]].vertex, x[sigma[j]].vertex):
                    return False
    return True


def apply_shuffle(x: Word, sigma) -> Word:
    return tuple(x[s] for s in sigma)


# ---------------------------------------------------------------------------
# Foata normal form


@dataclass(frozen=True)
class CanonicalForm:
    """Left Foata normal form with vertex-sorted blocks; hashable."""

    blocks: tuple  # tuple[tuple[Letter, ...], ...]

    def word(self) -> Word:
        return tuple(l for b in self.blocks for l in b)

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    def validate(self, ctx: GPContext) -> None:
        """Check the block invariants; raises GPValidationError."""
        if not is_reduced(ctx, self.word()):
            raise GPValidationError("canonical word is not reduced")
        for b in self.blocks:
            if not b:
                raise GPValidationError("empty block")
            vs = [l.vertex for l in b]
            if vs != sorted(vs) or len(set(vs)) != len(vs):
                raise GPValidationError("block not sorted by distinct vertices")
            for i in range(len(b)):
                for j in range(i + 1, len(b)):
                    if not ctx.adjacent(b[i].vertex, b[j].vertex):
                        raise GPValidationError("block vertices not adjacent")
        for i in range(1, len(self.blocks)):
            prev = [l.vertex for l in self.blocks[i - 1]]
            for l in self.blocks[i]:
                if all(ctx.adjacent(l.vertex, u) for u in prev):
                    raise GPValidationError(
                        "letter %r commutes into the previous block" % (l,))


def _first_block(ctx: GPContext, w: Word):
    """Indices of letters commuting to the front of reduced w."""
    picked = []
    for i, l in enumerate(w):
        if all(ctx.adjacent(l.vertex, w[j].vertex) for j in range(i)):
            picked.append(i)
    return picked


def foata_left(ctx: GPContext, w: Word) -> CanonicalForm:
    """Canonical form of [w]: greedy front blocks, each sorted by vertex."""
    rest = list(reduce_word(ctx, w))
    blocks = []
    while rest:
        idx = _first_block(ctx, tuple(rest))
        block = sorted((rest[i] for i in idx), key=lambda l: l.vertex)
        blocks.append(tuple(block))
        for i in reversed(idx):
            del rest[i]
    return CanonicalForm(tuple(blocks))


def foata_right(ctx: GPContext, w: Word) -> CanonicalForm:
    """Dual form: blocks peeled greedily from the back of the word."""
    rest = list(reduce_word(ctx, w))
    rev_blocks = []
    while rest:
        n = len(rest)
        idx = [i for i in range(n)
               if all(ctx.adjacent(rest[i].vertex, rest[j].vertex)
                      for j in range(i + 1, n))]
        block = sorted((rest[i] for i in idx), key=lambda l: l.vertex)
        rev_blocks.append(tuple(block))
        for i in reversed(idx):
            del rest[i]
    return CanonicalForm(tuple(reversed(rev_blocks)))


def canonical(ctx: GPContext, w: Word) -> CanonicalForm:
    return foata_left(ctx, w)


def equal(ctx: GPContext, u: Word, v: Word) -> bool:
    """The word problem: compare canonical forms."""
    return canonical(ctx, u) == canonical(ctx, v)


def multiply(ctx: GPContext, u: Word, v: Word) -> CanonicalForm:
    return canonical(ctx, tuple(u) + tuple(v))


def canonical_word(ctx: GPContext, w: Word) -> Word:
    """Flat reduced word read off the canonical form."""
    return canonical(ctx, w).word()
