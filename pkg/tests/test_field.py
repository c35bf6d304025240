import itertools

import numpy as np
import pytest

from unitalblocks.field import UnsupportedOrder, build_field, hermitian_norm, is_prime, smallest_nonresidue


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_field_axioms(q):
    ctx = build_field(q)
    n = ctx.order
    assert n == q * q
    add, mul = ctx.add, ctx.mul
    els = np.arange(n)
    # commutativity and identities
    assert (add == add.T).all() and (mul == mul.T).all()
    assert (add[0] == els).all() and (mul[1] == els).all() and (mul[0] == 0).all()
    assert (add[els, ctx.neg] == 0).all()
    assert (mul[els[1:], ctx.inv[1:]] == 1).all()
    # associativity and distributivity on all triples for small q, a sample otherwise
    trip = np.array(list(itertools.product(range(n), repeat=3))) if n <= 25 else \
        np.random.default_rng(0).integers(0, n, size=(5000, 3))
    a, b, c = trip.T
    assert (mul[mul[a, b], c] == mul[a, mul[b, c]]).all()
    assert (add[add[a, b], c] == add[a, add[b, c]]).all()
    assert (mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all()


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_generator_and_frobenius(q):
    ctx = build_field(q)
    assert sorted(ctx.exp.tolist()) == list(range(1, ctx.order))
    a, b = np.meshgrid(np.arange(ctx.order), np.arange(ctx.order))
    conj = np.array([ctx.conj(x) for x in range(ctx.order)])
    assert (conj[ctx.mul[a, b]] == ctx.mul[conj[a], conj[b]]).all()
    assert (conj[ctx.add[a, b]] == ctx.add[conj[a], conj[b]]).all()
    # the norm lands in the prime subfield, encoded as 0..q-1
    assert all(hermitian_norm(x, ctx) < q for x in ctx.elements())


def test_gf4_table():
    ctx = build_field(2)
    w = ctx.w
    assert ctx.poly == (1, 1)
    assert ctx.mul[w, w] == ctx.add[w, 1]
    assert ctx.mul[1, w] == w
    # 4x4 table with 0, 1, w, w+1 encoded as 0, 1, 2, 3
    assert ctx.mul.tolist() == [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]


def test_hermitian_norm_examples():
    ctx = build_field(2)
    assert hermitian_norm(ctx.w, ctx) == 1
    for q in (2, 3, 5):
        c = build_field(q)
        assert hermitian_norm(0, c) == 0
        assert hermitian_norm(1, c) == 1


@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 41, -3])
def test_unsupported_order(bad):
    with pytest.raises(UnsupportedOrder, match="unsupported order"):
        build_field(bad)


def test_reduction_polynomial_is_irreducible():
    for q in (3, 5, 7, 11, 13):
        n = smallest_nonresidue(q)
        assert all(x * x % q != n for x in range(q))
        assert build_field(q).poly == (n, 0)
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
