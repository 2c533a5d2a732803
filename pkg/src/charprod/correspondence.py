"""Bijection between unit orbits {v, 1/v, -v, -1/v} and elements of F_q.

The orbits live in the union of the 2(q-1)-st and 2(q+1)-st roots of
unity inside F_{q^2}; the orbit of v maps to tau = (v - 1/v)^2 / 4 and
tau maps back to the orbit of sqrt(tau+1) + sqrt(tau).  The
multiplicative order of v encodes the square classes of tau and tau+1,
which yields a second, independent closed form for the cardinalities of
the A_{0,1} families (orbit counting instead of the rescaled formula).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .charsets import SignPair
from .ffield import Ext2Elem, FieldCtx, factorize, unit_order_test


@dataclass(frozen=True)
class Orbit:
    """Canonical representative of {v, 1/v, -v, -1/v} (minimal key)."""

    rep: Ext2Elem


def orbit_members(ctx: FieldCtx, v: Ext2Elem) -> tuple[Ext2Elem, ...]:
    vi = ctx.e2_inv(v)
    return tuple({v, vi, ctx.e2_neg(v), ctx.e2_neg(vi)})


def orbit_of(ctx: FieldCtx, v: Ext2Elem) -> Orbit:
    return Orbit(min(orbit_members(ctx, v), key=ctx.e2_key))


def tau_of_orbit(ctx: FieldCtx, v: Ext2Elem) -> int:
    """tau = (v - 1/v)^2 / 4; v must lie in mu_{2q-2} or mu_{2q+2}."""
    if not (unit_order_test(ctx, v, 2 * (ctx.q - 1), 1)
            or unit_order_test(ctx, v, 2 * (ctx.q + 1), 1)):
        raise ValueError("v is not a 2(q-1)-st or 2(q+1)-st root of unity")
    d = ctx.e2_sub(v, ctx.e2_inv(v))
    sq = ctx.e2_mul(d, d)
    quarter = ctx.e2_embed(ctx.inv(ctx.from_int(4)))
    return ctx.e2_project(ctx.e2_mul(sq, quarter))


def orbit_of_tau(ctx: FieldCtx, tau: int) -> Orbit:
    """The orbit of sqrt(tau+1) + sqrt(tau), roots taken in F_{q^2}."""
    v = ctx.e2_add(ctx.e2_sqrt(ctx.add(tau, ctx.one)), ctx.e2_sqrt(tau))
    orb = orbit_of(ctx, v)
    assert tau_of_orbit(ctx, orb.rep) == tau, "orbit round-trip failed"
    return orb


def classify_tau(ctx: FieldCtx, tau: int) -> Optional[SignPair]:
    """Square classes (chi(tau), chi(tau+1)), cross-checked on the orbit.

    Returns None for the degenerate tau in {0, -1} (fourth roots of
    unity); otherwise asserts the order relation v^(q - ab) = b.
    """
    if tau == 0 or tau == ctx.minus_one:
        return None
    a = ctx.legendre(tau)
    b = ctx.legendre(ctx.add(tau, ctx.one))
    v = orbit_of_tau(ctx, tau).rep
    assert unit_order_test(ctx, v, ctx.q - a * b, b), \
        "square classes disagree with the unit order"
    return SignPair(a, b)


def orbit_count_card(ctx: FieldCtx, e1: int, e2: int) -> int:
    """|A_{0,1}^{e1,e2}| by counting orbits of {v : v^(q+a) = b}.

    With a = -e1*e2 and b = e2 there are q + a such v; dropping the
    fourth roots of unity among them leaves full orbits of size 4.
    This is independent of the m/eps cardinality formulas.
    """
    if e1 not in (1, -1) or e2 not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    q = ctx.q
    a = -e1 * e2
    b = e2
    mu4 = 0
    if b == 1:
        mu4 += 2  # +1 and -1 always satisfy v^(q+a) = 1
    if (-1) ** ((q + a) // 2) == b:
        mu4 += 2  # the two primitive fourth roots
    return (q + a - mu4) // 4


def ext2_generator(ctx: FieldCtx) -> Ext2Elem:
    """A deterministic generator of F_{q^2}^* (first in canonical order)."""
    order = ctx.q * ctx.q - 1
    primes = [r for r, _ in factorize(order)]
    one = ctx.e2_embed(ctx.one)
    for lo in ctx.elements_canonical():
        for hi in ctx.elements_canonical():
            if hi == 0:
                continue  # base-field elements never generate
            g = Ext2Elem(lo, hi)
            if all(ctx.e2_pow(g, order // r) != one for r in primes):
                return g
    raise AssertionError("no generator found")  # unreachable


def roots_of_unity_union(ctx: FieldCtx) -> list[Ext2Elem]:
    """mu_{2(q-1)} united with mu_{2(q+1)}, by stepping a generator."""
    g = ext2_generator(ctx)
    order = ctx.q * ctx.q - 1
    seen: set[Ext2Elem] = set()
    for d in (2 * (ctx.q - 1), 2 * (ctx.q + 1)):
        z = ctx.e2_pow(g, order // d)
        w = ctx.e2_embed(ctx.one)
        for _ in range(d):
            seen.add(w)
            w = ctx.e2_mul(w, z)
    return sorted(seen, key=ctx.e2_key)


def all_orbits(ctx: FieldCtx) -> list[Orbit]:
    """The distinct orbits partitioning the two root-of-unity groups."""
    reps = {orbit_of(ctx, v).rep for v in roots_of_unity_union(ctx)}
    return [Orbit(r) for r in sorted(reps, key=ctx.e2_key)]
