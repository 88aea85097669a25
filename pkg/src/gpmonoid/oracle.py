"""Brute-force reference semantics for the graph product.

Everything here works straight off the defining relations: identity
letters may be deleted or inserted, adjacent same-vertex letters may be
multiplied together or a letter split into two factors, and letters at
adjacent vertices may be swapped.  Equality is breadth-first reachability
under those moves inside a length cap.  Nothing in this module consults
the normal form algorithms, so it can sit on the other side of every
equality the package claims.

Accelerations (all verdict-identical to the plain bounded search):

* a per-vertex projection check: folding the letters at one vertex
  through its multiplication table is a retraction, so words with
  different projections are never equivalent;
* for contexts whose monoids are all finite, a one-off sweep partitions
  every word up to a fixed cap into connected components, after which
  queries are dictionary lookups;
* rewriting toward reduced words never has to pass length
  max(|u|, |v|): deleting identities and merging letters are the only
  length changers and both shrink, so exploration above that length is
  pruned even when the configured bound allows slack.

GP_ORACLE_BOUND overrides the default slack added to max(|u|, |v|).
"""

from __future__ import annotations

import os
from itertools import product as iproduct

from .core import (
    FiniteMonoid, FreeMonoid, GPContext, GPInternalError, Letter, Word,
    support, vertex_divides, vertex_projection,
)

DEFAULT_SLACK = 2
_MAX_TABLE_STATES = 400_000
_MAX_TABLE_CAP = 7


def default_slack() -> int:
    env = os.environ.get("GP_ORACLE_BOUND")
    if env is None:
        return DEFAULT_SLACK
    try:
        return max(0, int(env))
    except ValueError:
        raise GPInternalError("GP_ORACLE_BOUND must be an integer") from None


# ---------------------------------------------------------------------------
# letter registry: words become byte strings of letter ids


class _Registry:
    """Letters of a context numbered for compact oracle states.

    For finite monoids the registry is the full letter set; free-monoid
    elements created by merges are registered on the fly.
    """

    def __init__(self, ctx: GPContext):
        self.ctx = ctx
        self.letters: list = []
        self.index: dict = {}
        self.identity_ids: list = []
        self._splits: dict = {}
        self._merge: dict = {}
        for v, m in enumerate(ctx.monoids):
            if isinstance(m, FiniteMonoid):
                for x in m.elements():
                    self.register(Letter(v, x))
            else:
                self.register(Letter(v, ""))
        self.all_finite = all(isinstance(m, FiniteMonoid) for m in ctx.monoids)
        self.static_count = len(self.letters)

    def register(self, l: Letter) -> int:
        i = self.index.get(l)
        if i is None:
            i = len(self.letters)
            if i > 255:
                raise GPInternalError("oracle letter registry overflow")
            self.letters.append(l)
            self.index[l] = i
            if self.ctx.is_identity_letter(l):
                self.identity_ids.append(i)
        return i

    def encode(self, w: Word) -> bytes:
        return bytes(self.register(l) for l in w)

    def decode(self, s: bytes) -> Word:
        return tuple(self.letters[i] for i in s)

    def merge(self, i: int, j: int) -> int:
        key = (i, j)
        out = self._merge.get(key)
        if out is None:
            a, b = self.letters[i], self.letters[j]
            m = self.ctx.monoid(a.vertex)
            out = self.register(Letter(a.vertex, m.mul(a.element, b.element)))
            self._merge[key] = out
        return out

    def splits(self, i: int) -> tuple:
        out = self._splits.get(i)
        if out is None:
            l = self.letters[i]
            m = self.ctx.monoid(l.vertex)
            pairs = []
            if isinstance(m, FiniteMonoid):
                for a in m.elements():
                    for b in m.elements():
                        if m.mul(a, b) == l.element:
                            pairs.append((self.register(Letter(l.vertex, a)),
                                          self.register(Letter(l.vertex, b))))
            else:
                s = l.element
                for cut in range(len(s) + 1):
                    pairs.append((self.register(Letter(l.vertex, s[:cut])),
                                  self.register(Letter(l.vertex, s[cut:]))))
            out = tuple(pairs)
            self._splits[i] = out
        return out

    def successors(self, state: bytes, cap: int):
        ctx = self.ctx
        letters = self.letters
        idset = self.identity_ids
        n = len(state)
        grow = n < cap
        for i in range(n):
            li = letters[state[i]]
            if ctx.is_identity_letter(li):
                yield state[:i] + state[i + 1:]
            if i + 1 < n:
                lj = letters[state[i + 1]]
                if li.vertex == lj.vertex:
                    yield (state[:i] + bytes((self.merge(state[i], state[i + 1]),))
                           + state[i + 2:])
                elif ctx.adjacent(li.vertex, lj.vertex):
                    yield (state[:i] + bytes((state[i + 1], state[i]))
                           + state[i + 2:])
            if grow:
                for a, b in self.splits(state[i]):
                    yield state[:i] + bytes((a, b)) + state[i + 1:]
        if grow:
            for i in range(n + 1):
                for e in idset:
                    yield state[:i] + bytes((e,)) + state[i:]


_registries: dict = {}
_tables: dict = {}


def _registry(ctx: GPContext) -> _Registry:
    reg = _registries.get(ctx)
    if reg is None:
        reg = _Registry(ctx)
        _registries[ctx] = reg
    return reg


def _table_cap(letter_count: int) -> int:
    cap = 0
    total = 1
    while cap < _MAX_TABLE_CAP:
        nxt = total + letter_count ** (cap + 1)
        if nxt > _MAX_TABLE_STATES:
            break
        total = nxt
        cap += 1
    return cap


def _component_table(ctx: GPContext):
    """(components, cap): word -> component id over all words of length <= cap.

    Only built for all-finite contexts of manageable alphabet size.
    Connectivity at the cap coincides with graph product equality for
    words inside it, since a connecting path never needs intermediates
    longer than the longer endpoint.
    """
    cached = _tables.get(ctx)
    if cached is not None:
        return cached
    reg = _registry(ctx)
    if not reg.all_finite:
        _tables[ctx] = (None, 0)
        return _tables[ctx]
    k = reg.static_count
    cap = _table_cap(k)
    if cap < 2:
        _tables[ctx] = (None, 0)
        return _tables[ctx]
    comp: dict = {}
    cid = 0
    succ = reg.successors
    for length in range(cap + 1):
        for tup in iproduct(range(k), repeat=length):
            w = bytes(tup)
            if w in comp:
                continue
            cid += 1
            comp[w] = cid
            stack = [w]
            while stack:
                s = stack.pop()
                for t in succ(s, cap):
                    if t not in comp:
                        comp[t] = cid
                        stack.append(t)
    _tables[ctx] = (comp, cap)
    return _tables[ctx]


def _projections_differ(ctx: GPContext, u: Word, v: Word) -> bool:
    for w in range(ctx.graph.n):
        if vertex_projection(ctx, u, w) != vertex_projection(ctx, v, w):
            return True
    return False


def oracle_equal(ctx: GPContext, u: Word, v: Word, bound=None) -> bool:
    """Reachability between u and v under the defining relations.

    The search keeps intermediate words within `bound` letters (default:
    max(|u|, |v|) plus the configured slack).
    """
    if tuple(u) == tuple(v):
        return True
    if _projections_differ(ctx, u, v):
        return False
    if bound is None:
        bound = max(len(u), len(v)) + default_slack()
    comp, cap = _component_table(ctx)
    if comp is not None and len(u) <= cap and len(v) <= cap \
            and bound >= max(len(u), len(v)):
        reg = _registry(ctx)
        return comp[reg.encode(u)] == comp[reg.encode(v)]
    return _search_equal(ctx, u, v, bound)


def _search_equal(ctx: GPContext, u: Word, v: Word, bound: int) -> bool:
    """Best-first search from the longer word, early-exiting into the
    component table when one is available."""
    import heapq

    reg = _registry(ctx)
    if len(v) > len(u):
        u, v = v, u
    start = reg.encode(u)
    target = reg.encode(v)
    explore_cap = min(bound, max(len(u), len(v)))
    comp, cap = _component_table(ctx)
    target_class = None
    if comp is not None and len(v) <= cap:
        target_class = comp[target]
    seen = {start}
    heap = [(len(start), start)]
    while heap:
        _, s = heapq.heappop(heap)
        if s == target:
            return True
        if target_class is not None and len(s) <= cap:
            return comp[s] == target_class
        for t in reg.successors(s, explore_cap):
            if t not in seen:
                if t == target:
                    return True
                seen.add(t)
                heapq.heappush(heap, (len(t), t))
    return False


# ---------------------------------------------------------------------------
# element enumeration and the derived oracles


def _free_factors(ctx: GPContext, words, vertex: int):
    """Nonempty factors (substrings) of the vertex's letters across words."""
    out = set()
    for w in words:
        for l in w:
            if l.vertex != vertex:
                continue
            s = l.element
            for i in range(len(s)):
                for j in range(i + 1, len(s) + 1):
                    out.add(s[i:j])
    return out


def candidate_letters(ctx: GPContext, vertices, words) -> list:
    """Non-identity letters at the given vertices; free-monoid elements
    are restricted to factors of letters occurring in `words`."""
    letters = []
    for v in sorted(vertices):
        m = ctx.monoid(v)
        if isinstance(m, FiniteMonoid):
            letters.extend(Letter(v, x) for x in m.elements()
                           if x != m.identity)
        else:
            letters.extend(Letter(v, s) for s in sorted(
                _free_factors(ctx, words, v), key=m.element_key))
    return sorted(letters, key=ctx.letter_key)


def oracle_leq_principal(ctx: GPContext, u: Word, v: Word, bound: int):
    """Shortlex-least word c with c*v equivalent to u, or None.

    Candidate letters live at the vertices of u and v; free-monoid
    letters are limited to factors of the letters of u and v.
    """
    letters = candidate_letters(ctx, support(u) | support(v), (u, v))
    pu = {w: vertex_projection(ctx, u, w) for w in range(ctx.graph.n)}
    pv = {w: vertex_projection(ctx, v, w) for w in range(ctx.graph.n)}
    # projection is a retraction, so c*v = u needs a per-vertex solution
    # of p*proj(v) = proj(u); an unsolvable vertex settles the query
    for w in range(ctx.graph.n):
        if vertex_divides(ctx.monoid(w), pu[w], pv[w]) is None:
            return None
    for length in range(bound + 1):
        for tup in iproduct(letters, repeat=length):
            c = tuple(tup)
            ok = True
            for w in range(ctx.graph.n):
                m = ctx.monoid(w)
                if m.mul(vertex_projection(ctx, c, w), pv[w]) != pu[w]:
                    ok = False
                    break
            if ok and oracle_equal(ctx, c + tuple(v), u):
                return c
    return None


def oracle_elements(ctx: GPContext, max_len: int, letters=None):
    """One shortest representative word per element of length <= max_len.

    For all-finite contexts the representatives come straight out of the
    component table; otherwise words over `letters` are grouped by their
    vertex projections and split into classes with oracle_equal.
    """
    comp, cap = _component_table(ctx)
    if comp is not None and max_len <= cap:
        reg = _registry(ctx)
        best: dict = {}
        for w, cid in comp.items():
            if len(w) > max_len:
                continue
            cur = best.get(cid)
            if cur is None or (len(w), w) < (len(cur), cur):
                best[cid] = w
        reps = [reg.decode(w) for w in best.values()]
        return sorted(reps, key=ctx.word_key)
    if letters is None:
        raise GPInternalError(
            "oracle_elements needs an explicit letter universe here")
    groups: dict = {}
    for length in range(max_len + 1):
        for tup in iproduct(letters, repeat=length):
            w = tuple(tup)
            sig = tuple(vertex_projection(ctx, w, x)
                        for x in range(ctx.graph.n))
            groups.setdefault(sig, []).append(w)
    reps = []
    for members in groups.values():
        classes: list = []
        for w in sorted(members, key=ctx.word_key):
            for rep in classes:
                if oracle_equal(ctx, rep, w):
                    break
            else:
                classes.append(w)
        reps.extend(classes)
    return sorted(reps, key=ctx.word_key)


def oracle_intersection_elements(ctx: GPContext, a: Word, b: Word, bound: int):
    """Canonical forms of all elements of length <= bound lying in both
    principal left ideals, decided entirely by the bounded oracles."""
    from .normalform import canonical

    letters = None
    if not _registry(ctx).all_finite:
        letters = candidate_letters(ctx, set(range(ctx.graph.n)), (a, b))
    out = []
    for z in oracle_elements(ctx, bound, letters):
        if oracle_leq_principal(ctx, z, a, len(z)) is None:
            continue
        if oracle_leq_principal(ctx, z, b, len(z)) is None:
            continue
        out.append(canonical(ctx, z))
    return out


def oracle_annihilator_pairs(ctx: GPContext, a: Word, bound: int):
    """Pairs of distinct elements (lengths <= bound) that multiply a to the
    same element, listed once with the shortlex-smaller component first."""
    from .normalform import canonical

    letters = None
    if not _registry(ctx).all_finite:
        letters = candidate_letters(ctx, set(range(ctx.graph.n)), (a,))
    reps = oracle_elements(ctx, bound, letters)
    out = []
    for i, s in enumerate(reps):
        for t in reps[i + 1:]:
            if oracle_equal(ctx, s + tuple(a), t + tuple(a)):
                out.append((canonical(ctx, s), canonical(ctx, t)))
    return out
