"""Bookkeeping for how a product of two reduced words reduces.

When a reduced word s is multiplied onto a reduced word a, letters of s
are consumed one at a time.  Each consumed letter either glues onto a
letter of a (their product is not the identity) or deletes it (the
product is the identity, which forces the a-letter to be left
invertible).  Recording, in consumption order, which position of a each
move hit and whether it glued or deleted gives a "reduction function".
A fixed a admits only finitely many of them, and they drive both the
ideal intersection and the annihilator constructions.

Also here: the unique common-multiple factorization of two reduced
products representing the same element, and the double-shuffle
decomposition that classifies the first-block letters of both factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    GPContext, GPInternalError, GPPreconditionError, Letter, Word,
    left_inverse_of,
)
from .normalform import canonical, equal, is_reduced


@dataclass(frozen=True)
class ReductionFunction:
    """Moves of one reduction of some s*a, in consumption order.

    themap[p] is the 0-based position of a consumed by move p; moves
    listed in `glue` glued (the product survives at that position),
    moves in `delete` removed the letter.  Every prefix of a valid move
    sequence is itself valid, so enumeration returns whole trees of
    these including the empty one.
    """

    moves: int
    glue: tuple      # move indices, ascending
    delete: tuple    # move indices, ascending
    themap: tuple    # length == moves, distinct positions into a

    def validate(self, ctx: GPContext, a: Word) -> None:
        if sorted(self.glue + self.delete) != list(range(self.moves)):
            raise GPInternalError("moves must split into glue and delete")
        if len(self.themap) != self.moves:
            raise GPInternalError("position map has wrong arity")
        if len(set(self.themap)) != self.moves:
            raise GPInternalError("position map not injective")
        if not all(0 <= p < len(a) for p in self.themap):
            raise GPInternalError("position map out of range")
        removed: set = set()
        glued_vertices: list = []
        for p in range(self.moves):
            pos = self.themap[p]
            vert = a[pos].vertex
            for o in range(pos):
                if o not in removed and not ctx.adjacent(a[o].vertex, vert):
                    raise GPInternalError(
                        "move %d cannot reach the front of the residual" % p)
            # the consumed left-factor letter has to commute past every
            # product already glued in
            for gv in glued_vertices:
                if not ctx.adjacent(gv, vert):
                    raise GPInternalError(
                        "move %d not adjacent to an earlier glued vertex" % p)
            if p in self.delete:
                if left_inverse_of(ctx.monoid(vert), a[pos].element) is None:
                    raise GPInternalError(
                        "deletion move %d at a non-invertible letter" % p)
            else:
                glued_vertices.append(vert)
            removed.add(pos)

    def glued_positions(self):
        return tuple(self.themap[p] for p in self.glue)

    def deleted_positions(self):
        return tuple(self.themap[p] for p in self.delete)


@dataclass(frozen=True)
class TracedReduction:
    """Result of reduce_product_traced: the reduced word, the reduction
    function, and the consumed s-letters per move."""

    word: Word               # reduced form of s*a
    func: ReductionFunction
    consumed: tuple          # consumed[p] = the s-letter of move p
    survivors: int           # how many s-letters were prepended unconsumed

    def surviving_prefix(self) -> Word:
        return self.word[:self.survivors]

    def modified_tail(self) -> Word:
        return self.word[self.survivors:]


def reduce_product_traced(ctx: GPContext, s: Word, a: Word) -> TracedReduction:
    """Reduce s*a, recording which positions of a absorbed letters of s.

    Both inputs must be reduced.  With both sides reduced, an incoming
    s-letter can only ever glue onto or delete an a-originating letter
    (never another s-letter), which the trace checks as it goes.
    """
    if not is_reduced(ctx, s) or not is_reduced(ctx, a):
        raise GPPreconditionError("reduce_product_traced needs reduced inputs")
    acc = list(a)
    origin = list(range(len(a)))  # original a-position, or -1 for s-letters
    glue: list = []
    delete: list = []
    themap: list = []
    consumed: list = []
    for p in reversed(s):
        target = -1
        for k, q in enumerate(acc):
            if q.vertex == p.vertex:
                target = k
                break
            if not ctx.adjacent(p.vertex, q.vertex):
                break
        if target < 0:
            acc.insert(0, p)
            origin.insert(0, -1)
            continue
        if origin[target] < 0:
            raise GPInternalError(
                "letter of s interacted with another letter of s; "
                "inputs were not both reduced")
        move = len(themap)
        m = ctx.monoid(p.vertex)
        prod = m.mul(p.element, acc[target].element)
        themap.append(origin[target])
        consumed.append(p)
        if m.is_identity(prod):
            delete.append(move)
            del acc[target]
            del origin[target]
        else:
            glue.append(move)
            acc[target] = Letter(p.vertex, prod)
    func = ReductionFunction(len(themap), tuple(glue), tuple(delete),
                             tuple(themap))
    func.validate(ctx, a)
    out = TracedReduction(tuple(acc), func, tuple(consumed),
                          sum(1 for o in origin if o < 0))
    if not is_reduced(ctx, out.word):
        raise GPInternalError("traced reduction produced a non-reduced word")
    return out


def _glue_realizable(ctx: GPContext, l: Letter) -> bool:
    """Some non-identity left factor keeps the letter alive."""
    m = ctx.monoid(l.vertex)
    if hasattr(m, "alphabet"):
        return True  # free: products never collapse to the identity
    return any(not m.is_identity(p) and not m.is_identity(m.mul(p, l.element))
               for p in m.elements() if not m.is_identity(p))


def enumerate_reduction_functions(ctx: GPContext, a: Word) -> list:
    """All reduction functions a admits (a finite superset of those that
    an actual product can realize).

    Grown move by move: each next position must commute to the front of
    the residual word, sit at a vertex adjacent to all earlier glued
    vertices, and be deletable (left invertible letter) or gluable (some
    non-identity left factor keeps it), branching on the move kind.
    """
    if not is_reduced(ctx, a):
        raise GPPreconditionError("enumerate_reduction_functions needs a reduced")
    n = len(a)
    out: list = []

    def extend(glue, delete, themap, removed, glued_vertices):
        out.append(ReductionFunction(
            len(themap), tuple(glue), tuple(delete), tuple(themap)))
        for pos in range(n):
            if pos in removed:
                continue
            vert = a[pos].vertex
            if any(o not in removed and not ctx.adjacent(a[o].vertex, vert)
                   for o in range(pos)):
                continue
            if any(not ctx.adjacent(gv, vert) for gv in glued_vertices):
                continue
            move = len(themap)
            m = ctx.monoid(vert)
            if left_inverse_of(m, a[pos].element) is not None:
                extend(glue, delete + [move], themap + [pos],
                       removed | {pos}, glued_vertices)
            if _glue_realizable(ctx, a[pos]):
                extend(glue + [move], delete, themap + [pos],
                       removed | {pos}, glued_vertices + [vert])

    extend([], [], [], set(), [])
    uniq = sorted(set(out),
                  key=lambda f: (f.moves, f.glue, f.delete, f.themap))
    for f in uniq:
        f.validate(ctx, a)
    return uniq


# ---------------------------------------------------------------------------
# the canonical shuffle between two equal reduced words


def shuffle_bijection(ctx: GPContext, x: Word, y: Word) -> tuple:
    """bij[i] = position in y of the letter x[i].

    For equal reduced words the matching is forced: the j-th letter of x
    at a vertex corresponds to the j-th letter of y at that vertex, and
    the letters agree.  Raises if the words cannot match up.
    """
    if len(x) != len(y):
        raise GPPreconditionError("words of different lengths never shuffle")
    slots: dict = {}
    for j, l in enumerate(y):
        slots.setdefault(l.vertex, []).append(j)
    taken: dict = {}
    bij = []
    for l in x:
        k = taken.get(l.vertex, 0)
        positions = slots.get(l.vertex, [])
        if k >= len(positions):
            raise GPPreconditionError("vertex letter counts differ")
        j = positions[k]
        if y[j].element != l.element:
            raise GPPreconditionError("letter values differ at vertex %d"
                                      % l.vertex)
        taken[l.vertex] = k + 1
        bij.append(j)
    return tuple(bij)


@dataclass(frozen=True)
class Factorization:
    """Common-multiple factorization of [u*a] = [v*b].

    a_prime/b_prime are the positions of the letters of a (resp. b) that
    shuffle across into the other factor's left part; w is the rest of
    u, and [u] = [w * b'], [v] = [w * a'], [a' * b] = [b' * a].
    """

    w: Word
    a_prime: tuple
    b_prime: tuple


def factor_common_multiple(ctx: GPContext, u: Word, a: Word,
                           v: Word, b: Word) -> Factorization:
    """Factor two equal reduced products through their common part.

    Preconditions: u*a and v*b are reduced words for the same element.
    The canonical shuffle between them determines everything: b' is the
    set of b-positions landing inside u, a' the set of a-positions
    landing inside v.
    """
    ua = tuple(u) + tuple(a)
    vb = tuple(v) + tuple(b)
    if not is_reduced(ctx, ua) or not is_reduced(ctx, vb):
        raise GPPreconditionError("factor_common_multiple needs reduced products")
    if not equal(ctx, ua, vb):
        raise GPPreconditionError("factor_common_multiple needs [u*a] = [v*b]")
    bij = shuffle_bijection(ctx, ua, vb)
    a_prime = tuple(i for i in range(len(a))
                    if bij[len(u) + i] < len(v))
    inv = [0] * len(vb)
    for i, j in enumerate(bij):
        inv[j] = i
    b_prime = tuple(j for j in range(len(b))
                    if inv[len(v) + j] < len(u))
    b_image = {inv[len(v) + j] for j in b_prime}
    w = tuple(l for i, l in enumerate(u) if i not in b_image)
    fact = Factorization(w, a_prime, b_prime)
    _check_factorization(ctx, u, a, v, b, fact)
    return fact


def _check_factorization(ctx, u, a, v, b, fact):
    aw = tuple(a[i] for i in fact.a_prime)
    bw = tuple(b[j] for j in fact.b_prime)
    if not equal(ctx, u, fact.w + bw):
        raise GPInternalError("factorization lost the u part")
    if not equal(ctx, v, fact.w + aw):
        raise GPInternalError("factorization lost the v part")
    if not equal(ctx, aw + tuple(b), bw + tuple(a)):
        raise GPInternalError("factorization cross identity fails")


@dataclass(frozen=True)
class DoubleShuffleData:
    """Classification of the designated complete-block prefixes of two
    reduced words a, b with [a'*b] = [b'*a].

    Block positions split three ways: J (the position also sits in the
    transported subword), I (its letter shuffles onto a block letter of
    the other word; sigma pairs them up), K (the rest).  w_ab lists the
    matched I-letters once each; tail is what remains of [a'*b] after
    the leading complete block.
    """

    i_a: tuple
    j_a: tuple
    k_a: tuple
    i_b: tuple
    j_b: tuple
    k_b: tuple
    sigma: tuple       # pairs (i, j) with i in i_a matching j in i_b
    w_ab: Word
    tail: Word


def first_block_length(ctx: GPContext, w: Word) -> int:
    """Length of the first Foata block of the element of a reduced word."""
    return len(canonical(ctx, w).blocks[0]) if w else 0


def double_shuffle_decompose(ctx: GPContext, a: Word, b: Word,
                             a_prime: tuple, b_prime: tuple,
                             block_a: Optional[int] = None,
                             block_b: Optional[int] = None) -> DoubleShuffleData:
    """Trace where the block letters of a and b land inside [a'*b] = [b'*a].

    block_a/block_b give the lengths of the complete-block prefixes under
    consideration (default: the full first Foata blocks).  The matched
    letters w_ab together with the J-letters of both sides form the
    leading complete block of the common element.
    """
    if block_a is None:
        block_a = first_block_length(ctx, a)
    if block_b is None:
        block_b = first_block_length(ctx, b)
    aw = tuple(a[i] for i in a_prime)
    bw = tuple(b[j] for j in b_prime)
    left = bw + tuple(a)   # b' * a
    right = aw + tuple(b)  # a' * b
    if not is_reduced(ctx, left) or not is_reduced(ctx, right):
        raise GPPreconditionError("double shuffle needs reduced products")
    if not equal(ctx, left, right):
        raise GPPreconditionError("double shuffle needs [b'*a] = [a'*b]")
    bij = shuffle_bijection(ctx, left, right)
    i_a, j_a, k_a, sigma = [], [], [], []
    for i in range(block_a):
        dest = bij[len(bw) + i]
        if i in a_prime:
            j_a.append(i)
        elif len(aw) <= dest < len(aw) + block_b:
            i_a.append(i)
            sigma.append((i, dest - len(aw)))
        else:
            k_a.append(i)
    matched_b = {j for _, j in sigma}
    i_b, j_b, k_b = [], [], []
    for j in range(block_b):
        if j in b_prime:
            j_b.append(j)
        elif j in matched_b:
            i_b.append(j)
        else:
            k_b.append(j)
    data = DoubleShuffleData(
        tuple(i_a), tuple(j_a), tuple(k_a),
        tuple(i_b), tuple(j_b), tuple(k_b),
        tuple(sigma),
        tuple(a[i] for i in i_a),
        _double_shuffle_tail(ctx, a, b, a_prime, b_prime,
                             tuple(j_a), tuple(j_b), tuple(sigma)),
    )
    _check_double_shuffle(ctx, a, b, a_prime, b_prime, data)
    return data


def _double_shuffle_tail(ctx, a, b, a_prime, b_prime, j_a, j_b, sigma):
    """[a'*b] minus the leading complete block, read off the word a'*b."""
    matched_in_b = {j for _, j in sigma}
    head = []
    for rank, i in enumerate(a_prime):
        if i in j_a:
            head.append(rank)
    tail_a = tuple(a[i] for rank, i in enumerate(a_prime)
                   if rank not in head)
    tail_b = tuple(l for j, l in enumerate(b)
                   if j not in j_b and j not in matched_in_b)
    return tail_a + tail_b


def _check_double_shuffle(ctx, a, b, a_prime, b_prime, data):
    front = tuple(a[i] for i in data.j_a) + tuple(b[j] for j in data.j_b) \
        + data.w_ab
    verts = [l.vertex for l in front]
    if len(set(verts)) != len(verts):
        raise GPInternalError("leading block repeats a vertex")
    for x in range(len(front)):
        for y in range(x + 1, len(front)):
            if not ctx.adjacent(front[x].vertex, front[y].vertex):
                raise GPInternalError("leading block is not complete")
    aw = tuple(a[i] for i in a_prime)
    if not equal(ctx, aw + tuple(b), front + data.tail):
        raise GPInternalError("double shuffle decomposition does not multiply back")
    for i, j in data.sigma:
        if a[i].vertex != b[j].vertex or a[i].element != b[j].element:
            raise GPInternalError("matched block letters differ")
