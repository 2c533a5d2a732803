import pytest

from charprod.charsets import SIGN_PAIRS, a_family, card_closed, enumerate_family
from charprod.correspondence import (all_orbits, classify_tau, ext2_generator,
                                     orbit_count_card, orbit_members,
                                     orbit_of_tau, roots_of_unity_union,
                                     tau_of_orbit)
from charprod.ffield import unit_order_test
from helpers import field, small_ctxs


def _unit_of_order(ctx, d):
    g = ext2_generator(ctx)
    assert (ctx.q * ctx.q - 1) % d == 0
    return ctx.e2_pow(g, (ctx.q * ctx.q - 1) // d)


def test_tau_examples():
    for ctx in [field(7), field(13), field(3, 2)]:
        one = ctx.e2_embed(ctx.one)
        assert tau_of_orbit(ctx, one) == 0
        # primitive eighth root -> tau = -1/2
        zeta = _unit_of_order(ctx, 8)
        want = ctx.neg(ctx.inv(ctx.from_int(2)))
        assert tau_of_orbit(ctx, zeta) == want
        # primitive cube root -> tau = -3/4
        if ctx.p != 3:
            omega = _unit_of_order(ctx, 3)
            want = ctx.neg(ctx.div(ctx.from_int(3), ctx.from_int(4)))
            assert tau_of_orbit(ctx, omega) == want


def test_tau_of_orbit_rejects_foreign_units():
    # an element of order q^2 - 1 is in neither mu_{2q-2} nor mu_{2q+2}
    ctx = field(7)
    with pytest.raises(ValueError):
        tau_of_orbit(ctx, ext2_generator(ctx))


def test_orbit_of_tau_examples():
    c13 = field(13)
    orb = orbit_of_tau(c13, 0)
    assert set(orbit_members(c13, orb.rep)) == \
        {c13.e2_embed(c13.one), c13.e2_embed(c13.minus_one)}
    orb = orbit_of_tau(c13, c13.minus_one)
    members = orbit_members(c13, orb.rep)
    assert len(members) == 2
    for v in members:
        assert c13.e2_mul(v, v) == c13.e2_embed(c13.minus_one)
    # tau = -3/4 over F_7 is the orbit of the primitive cube roots
    c7 = field(7)
    tau = c7.neg(c7.div(c7.from_int(3), c7.from_int(4)))
    assert tau == 1
    orb = orbit_of_tau(c7, tau)
    orders = sorted(_order(c7, v) for v in orbit_members(c7, orb.rep))
    assert orders == [3, 3, 6, 6]


def _order(ctx, v):
    one = ctx.e2_embed(ctx.one)
    w, k = v, 1
    while w != one:
        w = ctx.e2_mul(w, v)
        k += 1
    return k


def test_orbit_size_four_unless_fourth_root():
    for ctx in small_ctxs()[:8]:
        for tau in range(ctx.q):
            orb = orbit_of_tau(ctx, tau)
            size = len(orbit_members(ctx, orb.rep))
            if tau in (0, ctx.minus_one):
                assert size == 2
            else:
                assert size == 4


def test_bijection_small():
    for ctx in small_ctxs():
        orbits = all_orbits(ctx)
        assert len(orbits) == ctx.q
        taus = sorted(tau_of_orbit(ctx, o.rep) for o in orbits)
        assert taus == list(range(ctx.q))
        by_tau = {tau_of_orbit(ctx, o.rep): o for o in orbits}
        for tau in range(ctx.q):
            assert orbit_of_tau(ctx, tau) == by_tau[tau]


def test_classification_examples():
    # both squares -> v in F_q (v^(q-1) = 1)
    for ctx in small_ctxs()[:8]:
        for tau in range(1, ctx.q):
            if tau == ctx.minus_one:
                continue
            cls = classify_tau(ctx, tau)
            v = orbit_of_tau(ctx, tau).rep
            if cls == (1, 1):
                assert unit_order_test(ctx, v, ctx.q - 1, 1)
        assert classify_tau(ctx, 0) is None
        assert classify_tau(ctx, ctx.minus_one) is None


def test_classify_minus_half():
    # tau = -1/2 comes from a primitive eighth root; classes follow
    # chi(-2), chi(2)
    for q in (11, 19, 17, 23):
        ctx = field(q)
        tau = ctx.neg(ctx.inv(ctx.from_int(2)))
        cls = classify_tau(ctx, tau)
        assert cls == (ctx.legendre(ctx.from_int(-2)),
                       ctx.legendre(ctx.from_int(2)))


def test_set_descriptions_via_units():
    # A_{0,1} and A_{-2,2} as images of the unit circle conditions
    for ctx in [field(5), field(7), field(13), field(3, 2)]:
        union = roots_of_unity_union(ctx)
        one2 = ctx.e2_embed(ctx.one)
        quarter = ctx.e2_embed(ctx.inv(ctx.from_int(4)))
        for sp in SIGN_PAIRS:
            a01, a22 = set(), set()
            for v in union:
                if ctx.e2_pow(v, 4) == one2:
                    continue
                if not unit_order_test(ctx, v, ctx.q - sp.e1 * sp.e2, sp.e2):
                    continue
                d = ctx.e2_sub(v, ctx.e2_inv(v))
                a01.add(ctx.e2_project(ctx.e2_mul(ctx.e2_mul(d, d), quarter)))
                v2 = ctx.e2_mul(v, v)
                a22.add(ctx.e2_project(ctx.e2_add(v2, ctx.e2_inv(v2))))
            assert a01 == set(enumerate_family(ctx, a_family(0, 1, sp)))
            two = ctx.from_int(2)
            assert a22 == set(enumerate_family(ctx, a_family(ctx.neg(two), two, sp)))


def test_orbit_count_examples():
    assert orbit_count_card(field(13), 1, 1) == 2
    assert orbit_count_card(field(13), 1, -1) == 3
    assert orbit_count_card(field(7), -1, -1) == 1
    assert len(enumerate_family(field(7), a_family(0, 1, (-1, -1)))) == 1


def test_orbit_count_matches_closed_cards():
    for ctx in small_ctxs():
        for sp in SIGN_PAIRS:
            assert orbit_count_card(ctx, sp.e1, sp.e2) == \
                card_closed(ctx, a_family(0, 1, sp))


def test_vw_relation_exists():
    # w = (2 + i(v - 1/v))/(v + 1/v) has w^2 in the orbit of the unit u
    # with <u> = r, for some branch pair (existential over the choices
    # of v within its orbit and of the square root i of -1)
    from charprod.closedform import normalized_frame
    from charprod.ffield import ext2_solve_unit

    for ctx in [field(5), field(7), field(11), field(13), field(3, 2)]:
        for tau in range(1, ctx.q):
            if tau == ctx.minus_one:
                continue
            frame = normalized_frame(ctx, tau)
            u_orbit = orbit_members(ctx, ext2_solve_unit(ctx, frame.r))
            v = orbit_of_tau(ctx, tau).rep
            i2 = ctx.e2_sqrt(ctx.minus_one)
            witnesses = []
            for vv in orbit_members(ctx, v):
                dv = ctx.e2_sub(vv, ctx.e2_inv(vv))
                sv = ctx.e2_add(vv, ctx.e2_inv(vv))
                for ii in (i2, ctx.e2_neg(i2)):
                    num = ctx.e2_add(ctx.e2_embed(ctx.from_int(2)),
                                     ctx.e2_mul(ii, dv))
                    try:
                        w = ctx.e2_div(num, sv)
                    except ZeroDivisionError:
                        continue
                    if ctx.e2_mul(w, w) in u_orbit:
                        witnesses.append((vv, ii))
            assert witnesses, (ctx.q, tau)


def test_all_square_class_power_is_mu():
    # for tau with both classes +1: u^m = mu, the class of 1 +- 1/sqrt(tau+1)
    for ctx in small_ctxs():
        from charprod.closedform import normalized_frame
        from charprod.ffield import ext2_solve_unit

        for tau in range(1, ctx.q):
            if tau == ctx.minus_one:
                continue
            if ctx.legendre(tau) != 1 or ctx.legendre(ctx.add(tau, ctx.one)) != 1:
                continue
            frame = normalized_frame(ctx, tau)
            u = ext2_solve_unit(ctx, frame.r)
            # mu via 1 + 1/c' with c' a root of 1 + 1/tau
            c_pr = ctx.sqrt_canonical(ctx.add(ctx.one, ctx.inv(tau)))
            mu = ctx.legendre(ctx.add(ctx.one, ctx.inv(c_pr)))
            assert unit_order_test(ctx, u, ctx.m, mu), (ctx.q, tau)
