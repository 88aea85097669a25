"""Shared contexts for the test suite.

Vertex monoids:
  U2: two elements {1, a} with a*a = a (the smallest non-group)
  Z2: two elements {1, g} with g*g = 1
  B3: the three element chain semilattice {1 > a > b} under meet
plus rank-1 free monoids for trace-style contexts.
"""

from gpmonoid.core import (
    FiniteMonoid, FreeMonoid, GPContext, Letter, make_graph,
)


def u2() -> FiniteMonoid:
    return FiniteMonoid(("1", "a"), 0, ((0, 1), (1, 1)))


def z2() -> FiniteMonoid:
    return FiniteMonoid(("1", "g"), 0, ((0, 1), (1, 0)))


def b3() -> FiniteMonoid:
    return FiniteMonoid(("1", "a", "b"), 0,
                        ((0, 1, 2), (1, 1, 2), (2, 2, 2)))


def m6() -> FiniteMonoid:
    """Six elements {1,a,b,c,d,z}: aa=ab=c, ba=bb=d, all else z.

    Ma meets Mb in {c,d,z}, which needs both c and d to generate, so
    this vertex is left ideal Howson but not an LCM monoid.
    """
    return FiniteMonoid(
        ("1", "a", "b", "c", "d", "z"), 0,
        ((0, 1, 2, 3, 4, 5),
         (1, 3, 3, 5, 5, 5),
         (2, 4, 4, 5, 5, 5),
         (3, 5, 5, 5, 5, 5),
         (4, 5, 5, 5, 5, 5),
         (5, 5, 5, 5, 5, 5)))


def z2_single() -> GPContext:
    """One vertex carrying Z2."""
    return GPContext(make_graph(1, []), (z2(),), ("A",))


def p2free() -> GPContext:
    """Two U2 vertices, no edge: the free product."""
    return GPContext(make_graph(2, []), (u2(), u2()), ("A", "B"))


def p2dir() -> GPContext:
    """Two U2 vertices joined by an edge: the direct product."""
    return GPContext(make_graph(2, [(0, 1)]), (u2(), u2()), ("A", "B"))


def l3() -> GPContext:
    """Three U2 vertices, single edge A-B."""
    return GPContext(make_graph(3, [(0, 1)]), (u2(), u2(), u2()),
                     ("A", "B", "C"))


def mixed3() -> GPContext:
    """Z2, U2, U2 on a path edge A-B."""
    return GPContext(make_graph(3, [(0, 1)]), (z2(), u2(), u2()),
                     ("A", "B", "C"))


def trace2() -> GPContext:
    """Two rank-1 free monoids with a commuting edge (N x N)."""
    return GPContext(make_graph(2, [(0, 1)]),
                     (FreeMonoid(("x",)), FreeMonoid(("y",))), ("A", "B"))


def t3free() -> GPContext:
    """Three U2 vertices, no edges."""
    return GPContext(make_graph(3, []), (u2(), u2(), u2()), ("A", "B", "C"))


def t3dir() -> GPContext:
    """Three U2 vertices, complete graph."""
    return GPContext(make_graph(3, [(0, 1), (0, 2), (1, 2)]),
                     (u2(), u2(), u2()), ("A", "B", "C"))


def ub3free() -> GPContext:
    """U2 and B3 with no edge (free product with a 3-element factor)."""
    return GPContext(make_graph(2, []), (u2(), b3()), ("A", "B"))


def z2z2free() -> GPContext:
    """Two copies of Z2, no edge (infinite dihedral flavor)."""
    return GPContext(make_graph(2, []), (z2(), z2()), ("A", "B"))


def groups3() -> GPContext:
    """Three Z2 vertices on a path: every vertex monoid a group."""
    return GPContext(make_graph(3, [(0, 1)]), (z2(), z2(), z2()),
                     ("A", "B", "C"))


def m6ctx() -> GPContext:
    """Single M6 vertex: the smallest non-LCM playground."""
    return GPContext(make_graph(1, []), (m6(),), ("A",))


def m6u() -> GPContext:
    """M6 and U2 joined by an edge."""
    return GPContext(make_graph(2, [(0, 1)]), (m6(), u2()), ("A", "B"))


def wedge3() -> GPContext:
    """U2, U2, Z2 with C adjacent to both others but A-B missing.

    A and B form the distinguished non-adjacent pair of two-element
    monoids; C is a group attached to everything.
    """
    return GPContext(make_graph(3, [(0, 2), (1, 2)]), (u2(), u2(), z2()),
                     ("A", "B", "C"))


# the fixture family the acceptance criteria sweep over
def standard_fixtures():
    return {
        "p2free": p2free(),
        "p2dir": p2dir(),
        "l3": l3(),
        "mixed3": mixed3(),
        "trace2": trace2(),
    }


def L(v, e) -> Letter:
    return Letter(v, e)


def w(*letters):
    return tuple(Letter(v, e) for v, e in letters)
