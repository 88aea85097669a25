"""Ideal intersections: generating sets and their shapes."""

import itertools

import pytest

from gpmonoid.core import (
    EMPTY_WORD,
    FreeMonoid,
    GPContext,
    GPPreconditionError,
    make_graph,
)
from gpmonoid.howson import (
    GeneratorSet,
    find_intersection_witness,
    intersect_principal,
    lcm_check,
)
from gpmonoid.ideals import leq_principal
from gpmonoid.normalform import canonical
from gpmonoid.oracle import oracle_elements, oracle_intersection_elements
from fixtures import (
    m6ctx,
    m6u,
    p2dir,
    p2free,
    standard_fixtures,
    trace2,
    ub3free,
    w,
    z2z2free,
)


def _gens(ctx, a, b):
    gs = intersect_principal(ctx, a, b)
    assert isinstance(gs, GeneratorSet)
    assert len(gs.generators) == len(gs.provenance)
    return list(gs.generators)


def test_witness_examples():
    got = find_intersection_witness(p2dir(), w((0, 1)), w((1, 1)))
    assert got == canonical(p2dir(), w((0, 1), (1, 1)))
    assert find_intersection_witness(p2free(), w((0, 1)), w((1, 1))) is None
    got = find_intersection_witness(p2free(), w((0, 1)), w((0, 1)))
    assert got == canonical(p2free(), w((0, 1)))


def test_witness_requires_reduced():
    with pytest.raises(GPPreconditionError):
        find_intersection_witness(p2free(), w((0, 0)), w((1, 1)))


def test_intersect_basic():
    assert _gens(p2dir(), w((0, 1)), w((1, 1))) \
        == [canonical(p2dir(), w((0, 1), (1, 1)))]
    assert _gens(p2free(), w((0, 1)), w((1, 1))) == []
    assert _gens(p2free(), w((0, 1)), w((0, 1))) \
        == [canonical(p2free(), w((0, 1)))]


def test_intersect_two_generators():
    # in M6, Ma and Mb meet exactly in {c, d}, an incomparable pair
    got = _gens(m6ctx(), w((0, 1)), w((0, 2)))
    want = {canonical(m6ctx(), w((0, 3))), canonical(m6ctx(), w((0, 4)))}
    assert set(got) == want

    got = _gens(m6u(), w((0, 1), (1, 1)), w((0, 2), (1, 1)))
    want = {canonical(m6u(), w((0, 3), (1, 1))),
            canonical(m6u(), w((0, 4), (1, 1)))}
    assert set(got) == want


def test_intersect_chain_monoid():
    # B3: ideals are nested, ab = b so Ma & Mb = Mb
    got = _gens(ub3free(), w((1, 1)), w((1, 2)))
    assert got == [canonical(ub3free(), w((1, 2)))]


def test_intersect_trace_monoid():
    ctx = trace2()
    got = _gens(ctx, w((0, "x")), w((1, "y")))
    assert got == [canonical(ctx, w((0, "x"), (1, "y")))]
    got = _gens(ctx, w((0, "xx")), w((0, "x")))
    assert got == [canonical(ctx, w((0, "xx")))]
    # distinct last letters on one free vertex never meet
    free2 = GPContext(make_graph(1, []), (FreeMonoid(("x", "y")),), ("A",))
    assert _gens(free2, w((0, "xy")), w((0, "yy"))) == []


def test_intersect_group_vertices():
    # both ideals are the whole monoid
    got = _gens(z2z2free(), w((0, 1)), w((1, 1)))
    assert got == [canonical(z2z2free(), EMPTY_WORD)]


def test_intersect_requires_reduced():
    with pytest.raises(GPPreconditionError):
        intersect_principal(p2free(), w((0, 1), (0, 1)), w((1, 1)))


def test_generators_are_sound():
    # every emitted generator lies in both ideals, checked per element
    pairs = [
        (p2dir(), w((0, 1)), w((1, 1))),
        (p2dir(), w((0, 1), (1, 1)), w((0, 1))),
        (m6u(), w((0, 1)), w((0, 2), (1, 1))),
        (trace2(), w((0, "x"), (1, "y")), w((0, "xx"))),
        (z2z2free(), w((0, 1), (1, 1)), w((1, 1))),
    ]
    for ctx, a, b in pairs:
        for g in _gens(ctx, a, b):
            gw = g.word()
            assert leq_principal(ctx, gw, a) is not None
            assert leq_principal(ctx, gw, b) is not None


def test_generators_cover_oracle_intersection():
    # bounded oracle members are all divisible by some generator
    for name, ctx in standard_fixtures().items():
        if name == "trace2":
            continue
        reps = oracle_elements(ctx, 2)
        for a, b in itertools.combinations(reps, 2):
            gens = _gens(ctx, a, b)
            for cf in oracle_intersection_elements(ctx, a, b,
                                                   len(a) + len(b) + 2):
                assert any(leq_principal(ctx, cf.word(), g.word()) is not None
                           for g in gens), (name, a, b)


def test_lcm_check():
    v = lcm_check(p2dir(), w((0, 1)), w((1, 1)))
    assert v.kind == "principal"
    assert v.generator == canonical(p2dir(), w((0, 1), (1, 1)))
    v = lcm_check(p2free(), w((0, 1)), w((1, 1)))
    assert v.kind == "empty"
    v = lcm_check(p2free(), w((0, 1)), w((0, 1)))
    assert v.kind == "principal"
    v = lcm_check(m6ctx(), w((0, 1)), w((0, 2)))
    assert v.kind == "not_principal"
    g, h = v.certificate
    assert leq_principal(m6ctx(), g.word(), h.word()) is None
    assert leq_principal(m6ctx(), h.word(), g.word()) is None
