import random

import pytest

from charprod.dickson import (dickson_first, dickson_second, poly_eval,
                              poly_eval_ext2, poly_str)
from charprod.ffield import Ext2Elem
from helpers import field, small_ctxs


def test_dickson_first_examples():
    c13, c23 = field(13), field(23)
    assert dickson_first(c13, 3) == [0, c13.neg(3), 0, 1]           # x^3 - 3x
    assert dickson_first(c23, 6) == [c23.neg(2), 0, 9, 0, c23.neg(6), 0, 1]
    assert dickson_first(c13, 0) == [2]


def test_dickson_second_examples():
    c13, c23 = field(13), field(23)
    assert dickson_second(c13, 2) == [c13.minus_one, 0, 1]          # x^2 - 1
    assert dickson_second(c23, 5) == [0, 3, 0, c23.neg(4), 0, 1]    # x^5 - 4x^3 + 3x
    assert dickson_second(c13, 0) == [1]


def test_degree_and_monic():
    for ctx in small_ctxs()[:6]:
        for k in range(1, 25):
            for f in (dickson_first(ctx, k), dickson_second(ctx, k)):
                assert len(f) == k + 1
                assert f[-1] == ctx.one


def test_rejects_negative_degree():
    with pytest.raises(ValueError):
        dickson_first(field(7), -1)
    with pytest.raises(ValueError):
        dickson_second(field(7), -2)


def test_poly_eval_examples():
    c13 = field(13)
    assert poly_eval(c13, dickson_first(c13, 3), 4) == 0
    assert poly_eval(c13, [2], 11) == 2
    assert poly_eval(c13, dickson_second(c13, 2), 1) == 0
    assert poly_eval(c13, [], 5) == 0


def test_functional_equations_random_units():
    # D_k(<u>) = <u^k> and E_{k-1}(<u>) = (u^k - u^-k)/(u - 1/u), checked
    # in F_{q^2} for random units u
    rng = random.Random(99)
    for ctx in small_ctxs():
        for _ in range(6):
            u = Ext2Elem(rng.randrange(ctx.q), rng.randrange(ctx.q))
            try:
                ui = ctx.e2_inv(u)
            except ZeroDivisionError:
                continue
            br = ctx.e2_add(u, ui)
            for k in range(0, 51, 7):
                uk = ctx.e2_pow(u, k)
                uki = ctx.e2_inv(uk)
                assert poly_eval_ext2(ctx, dickson_first(ctx, k), br) == \
                    ctx.e2_add(uk, uki)
                if k >= 1 and ctx.e2_mul(u, u) != ctx.e2_embed(ctx.one):
                    want = ctx.e2_div(ctx.e2_sub(uk, uki), ctx.e2_sub(u, ui))
                    assert poly_eval_ext2(ctx, dickson_second(ctx, k - 1), br) == want


def test_functional_equation_in_base_field():
    # brackets of roots of unity in mu_{q-1} and mu_{q+1} land in F_q,
    # where plain poly_eval applies
    from charprod.correspondence import ext2_generator

    for ctx in small_ctxs()[:6]:
        g = ext2_generator(ctx)
        for d in (ctx.q - 1, ctx.q + 1):
            u = ctx.e2_pow(g, (ctx.q * ctx.q - 1) // d)
            br = ctx.e2_add(u, ctx.e2_inv(u))
            x = ctx.e2_project(br)
            for k in (2, 3, 5, 11):
                want = ctx.e2_add(ctx.e2_pow(u, k), ctx.e2_pow(u, -k))
                assert ctx.e2_embed(poly_eval(ctx, dickson_first(ctx, k), x)) == want


def test_poly_str():
    c13 = field(13)
    assert poly_str(c13, dickson_first(c13, 3)) == "0 10 0 1"
    c9 = field(3, 2)
    assert poly_str(c9, [c9.encode((2, 1)), c9.one]) == "2,1 1,0"
