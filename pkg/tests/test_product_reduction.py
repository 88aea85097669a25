"""Traced left multiplication, reduction functions, factorizations."""

import itertools
import random

import pytest

from gpmonoid.core import EMPTY_WORD, GPPreconditionError, Letter
from gpmonoid.normalform import canonical, equal, is_reduced, reduce_word
from gpmonoid.product_reduction import (
    DoubleShuffleData,
    Factorization,
    ReductionFunction,
    double_shuffle_decompose,
    enumerate_reduction_functions,
    factor_common_multiple,
    first_block_length,
    reduce_product_traced,
    shuffle_bijection,
)
from fixtures import l3, p2dir, p2free, standard_fixtures, w, z2_single


def test_traced_glue():
    tr = reduce_product_traced(p2free(), w((0, 1)), w((0, 1)))
    assert tr.word == w((0, 1))           # a*a = a
    assert tr.func.moves == 1
    assert tr.func.glue == (0,) and tr.func.delete == ()
    assert tr.func.themap == (0,)
    assert tr.consumed == w((0, 1))
    assert tr.survivors == 0


def test_traced_delete():
    tr = reduce_product_traced(z2_single(), w((0, 1)), w((0, 1)))
    assert tr.word == EMPTY_WORD          # g*g = 1
    assert tr.func.moves == 1
    assert tr.func.delete == (0,) and tr.func.glue == ()


def test_traced_no_interaction():
    tr = reduce_product_traced(p2free(), w((1, 1)), w((0, 1)))
    assert tr.word == w((1, 1), (0, 1))
    assert tr.func.moves == 0
    assert tr.survivors == 1
    assert tr.surviving_prefix() == w((1, 1))
    assert tr.modified_tail() == w((0, 1))


def test_traced_requires_reduced():
    with pytest.raises(GPPreconditionError):
        reduce_product_traced(p2free(), w((0, 1), (0, 1)), w((1, 1)))


def _letters(ctx):
    out = []
    for v in range(ctx.graph.n):
        m = ctx.monoids[v]
        if hasattr(m, "size"):
            out.extend(Letter(v, e) for e in m.elements()
                       if not m.is_identity(e))
        else:
            out.extend(Letter(v, c) for c in m.alphabet)
    return out


def test_traced_matches_reduce():
    rng = random.Random(17)
    for name, ctx in standard_fixtures().items():
        letters = _letters(ctx)
        for _ in range(80):
            s = reduce_word(ctx, tuple(rng.choice(letters)
                                       for _ in range(rng.randrange(4))))
            a = reduce_word(ctx, tuple(rng.choice(letters)
                                       for _ in range(rng.randrange(4))))
            tr = reduce_product_traced(ctx, s, a)
            assert canonical(ctx, tr.word) == canonical(ctx, s + a), name


def test_enumerate_counts():
    fns = enumerate_reduction_functions(p2free(), w((0, 1)))
    assert len(fns) == 2
    kinds = {(f.moves, f.glue, f.delete, f.themap) for f in fns}
    assert kinds == {(0, (), (), ()), (1, (0,), (), (0,))}

    fns = enumerate_reduction_functions(z2_single(), w((0, 1)))
    assert len(fns) == 2
    kinds = {(f.moves, f.glue, f.delete, f.themap) for f in fns}
    assert kinds == {(0, (), (), ()), (1, (), (0,), (0,))}

    fns = enumerate_reduction_functions(p2free(), w((0, 1), (1, 1)))
    assert len(fns) == 2
    kinds = {(f.moves, f.glue, f.delete, f.themap) for f in fns}
    assert kinds == {(0, (), (), ()), (1, (0,), (), (0,))}


def test_realized_functions_are_enumerated():
    rng = random.Random(19)
    for name, ctx in standard_fixtures().items():
        letters = _letters(ctx)
        for _ in range(60):
            s = reduce_word(ctx, tuple(rng.choice(letters)
                                       for _ in range(rng.randrange(4))))
            a = reduce_word(ctx, tuple(rng.choice(letters)
                                       for _ in range(rng.randrange(4))))
            tr = reduce_product_traced(ctx, s, a)
            assert tr.func in enumerate_reduction_functions(ctx, a), name


def test_shuffle_bijection_roundtrip():
    ctx = p2dir()
    x = w((0, 1), (1, 1))
    y = w((1, 1), (0, 1))
    bij = shuffle_bijection(ctx, x, y)
    assert sorted(bij) == [0, 1]
    for i, j in enumerate(bij):
        assert x[i] == y[j]


def test_factor_crossing_pair():
    fact = factor_common_multiple(p2dir(), w((1, 1)), w((0, 1)),
                                  w((0, 1)), w((1, 1)))
    assert fact.w == EMPTY_WORD
    assert fact.a_prime == (0,)
    assert fact.b_prime == (0,)


def test_factor_identical_sides():
    u = w((0, 1), (1, 1))
    fact = factor_common_multiple(p2free(), u, w((0, 1)), u, w((0, 1)))
    assert fact.w == u
    assert fact.a_prime == () and fact.b_prime == ()


def test_factor_empty_divisor():
    fact = factor_common_multiple(l3(), w((2, 1)), w((0, 1)),
                                  w((2, 1), (0, 1)), EMPTY_WORD)
    assert fact.w == w((2, 1))
    assert fact.a_prime == (0,)
    assert fact.b_prime == ()


def test_factor_preconditions():
    with pytest.raises(GPPreconditionError):
        factor_common_multiple(p2free(), w((0, 1)), w((0, 1)),
                               EMPTY_WORD, w((0, 1)))  # u*a not reduced
    with pytest.raises(GPPreconditionError):
        factor_common_multiple(p2free(), w((1, 1)), w((0, 1)),
                               w((0, 1)), w((1, 1)))  # not equal here


def test_factor_primes_independent_of_witness():
    # same (a, b), every witness pair: identical position sets
    ctx = p2dir()
    a = w((0, 1))
    b = w((0, 1))
    letters = _letters(ctx)
    seen = set()
    words = [EMPTY_WORD] + [(l,) for l in letters] \
        + [(x, y) for x in letters for y in letters]
    for u, v in itertools.product(words, repeat=2):
        ua, vb = u + a, v + b
        if not (is_reduced(ctx, ua) and is_reduced(ctx, vb)):
            continue
        if not equal(ctx, ua, vb):
            continue
        fact = factor_common_multiple(ctx, u, a, v, b)
        seen.add((fact.a_prime, fact.b_prime))
    assert len(seen) == 1


def test_first_block_length():
    assert first_block_length(p2dir(), w((0, 1), (1, 1))) == 2
    assert first_block_length(p2free(), w((0, 1), (1, 1))) == 1
    assert first_block_length(p2free(), EMPTY_WORD) == 0


def test_double_shuffle_crossing_pair():
    data = double_shuffle_decompose(p2dir(), w((0, 1)), w((1, 1)),
                                    (0,), (0,))
    assert data.j_a == (0,) and data.j_b == (0,)
    assert data.i_a == () and data.i_b == ()
    assert data.k_a == () and data.k_b == ()
    assert data.sigma == ()
    assert data.w_ab == EMPTY_WORD


def test_double_shuffle_self_match():
    a = w((0, 1), (1, 1))
    data = double_shuffle_decompose(p2dir(), a, a, (), ())
    assert data.i_a == (0, 1) and data.i_b == (0, 1)
    assert data.j_a == () and data.j_b == ()
    assert set(data.sigma) == {(0, 0), (1, 1)}

    data = double_shuffle_decompose(p2free(), w((0, 1)), w((0, 1)), (), ())
    assert data.i_a == (0,)
    assert data.sigma == ((0, 0),)


def test_double_shuffle_precondition():
    with pytest.raises(GPPreconditionError):
        double_shuffle_decompose(p2free(), w((0, 1)), w((1, 1)), (0,), (0,))
