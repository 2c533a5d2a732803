"""Closed-form product formulas for the character-cut set families.

Everything here produces exact field values that the brute-force scans
in ``charsets`` must reproduce.  The normalization fixes j + l = 4 for
T-families (equivalently l - k = 4 for S-families, with j = -k), which
reduces all products to a single parameter tau = j/l in F_q plus a point
at infinity (l = 0).  The linked quantities

    k = -j = 4*tau/(tau+1)     l = 4/(tau+1)     r = l - 2 = k + 2
    tau' = k/4                 tau = j/l = (2-r)/(2+r)

are carried in a NormalizedFrame.  The dispatch handles the special
ratios tau in {0, inf, 1, 3, 1/3} first, then the all-square class, then
the three mixed square classes via the deterministic square roots a1,
a2, a3 (which are rational in r, hence invariant under u -> 1/u).

S-products are served exclusively through T-products: S_{k,l}^{s1,s2}
equals T_{-k,l}^{eps*s1, s2} as a set, eps the character of -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .charsets import SignPair
from .ffield import FieldCtx, ext2_solve_unit


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "inf"


INF = _Infinity()

ProjTau = Union[int, _Infinity]


def tau_str(tau: ProjTau, ctx: Optional[FieldCtx] = None) -> str:
    if isinstance(tau, _Infinity):
        return "inf"
    return ctx.elem_str(tau) if ctx is not None else str(tau)


@dataclass(frozen=True)
class NormalizedFrame:
    """tau together with the linked normalized parameters."""

    tau: ProjTau
    j: int
    k: int
    l: int
    r: int
    tau_prime: int
    tau_prime_defined: bool  # False only at tau = inf, where k/4 = -1


def normalized_frame(ctx: FieldCtx, tau: ProjTau) -> NormalizedFrame:
    """Compute (j, k, l, r, tau') for a ratio tau != -1."""
    four = ctx.from_int(4)
    if isinstance(tau, _Infinity):
        return NormalizedFrame(tau=INF, j=four, k=ctx.neg(four), l=0,
                               r=ctx.from_int(-2), tau_prime=ctx.minus_one,
                               tau_prime_defined=False)
    if tau == ctx.minus_one:
        raise ValueError("tau = -1 is excluded")
    den = ctx.add(tau, ctx.one)
    l = ctx.div(four, den)
    j = ctx.mul(tau, l)
    k = ctx.neg(j)
    r = ctx.sub(l, ctx.from_int(2))
    frame = NormalizedFrame(tau=tau, j=j, k=k, l=l, r=r,
                            tau_prime=ctx.div(k, four), tau_prime_defined=True)
    # round-trip tau = (2-r)/(2+r); 2+r = l is nonzero here
    assert ctx.div(ctx.sub(ctx.from_int(2), r), l) == tau
    return frame


def frame_from_pair(ctx: FieldCtx, j: int, l: int) -> NormalizedFrame:
    """Frame for a normalized pair (j + l = 4)."""
    if ctx.add(j, l) != ctx.from_int(4):
        raise ValueError("pair is not normalized: j + l != 4")
    return normalized_frame(ctx, INF if l == 0 else ctx.div(j, l))


def prod_S_single(ctx: FieldCtx, k: int, sign: int) -> int:
    """Product over {a in F_q^* : chi(a+k) = sign}, in closed form."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    eps_elem = ctx.one if ctx.eps == 1 else ctx.minus_one
    if k == 0:
        return ctx.neg(eps_elem) if sign == 1 else eps_elem
    two = ctx.from_int(2)
    if ctx.legendre(k) == 1:
        if sign == 1:
            return ctx.div(eps_elem, ctx.mul(two, k))
        return ctx.mul(eps_elem, two)
    if sign == 1:
        return ctx.neg(ctx.mul(eps_elem, two))
    return ctx.neg(ctx.div(eps_elem, ctx.mul(two, k)))


def quadruple_from_one(ctx: FieldCtx, k: int, l: int,
                       known: tuple[SignPair, int]) -> dict[SignPair, int]:
    """All four S_{k,l} products from any single one.

    Chains the three disjoint-union relations against the closed single
    products; every product involved is a unit, so the divisions are
    always defined.
    """
    if k == l:
        raise ValueError("k != l required")
    signs, value = known
    signs = SignPair(*signs)

    # extra factor contributed by the element killing the other condition
    f_plus = ctx.neg(l) if (ctx.legendre(ctx.sub(k, l)) == 1 and l != 0) else ctx.one
    f_minus = ctx.neg(k) if (ctx.legendre(ctx.sub(l, k)) == -1 and k != 0) else ctx.one
    f_minus2 = ctx.neg(l) if (ctx.legendre(ctx.sub(k, l)) == -1 and l != 0) else ctx.one
    pk_plus = prod_S_single(ctx, k, 1)
    pk_minus = prod_S_single(ctx, k, -1)
    pl_minus = prod_S_single(ctx, l, -1)

    out: dict[SignPair, int] = {signs: value}

    def solve_pp_pm():
        # pk_plus = P[++] * P[+-] * f_plus
        if SignPair(1, 1) in out and SignPair(1, -1) not in out:
            out[SignPair(1, -1)] = ctx.div(pk_plus, ctx.mul(out[SignPair(1, 1)], f_plus))
        elif SignPair(1, -1) in out and SignPair(1, 1) not in out:
            out[SignPair(1, 1)] = ctx.div(pk_plus, ctx.mul(out[SignPair(1, -1)], f_plus))

    def solve_mm():
        # pl_minus = P[--] * P[+-] * f_minus
        if SignPair(1, -1) in out and SignPair(-1, -1) not in out:
            out[SignPair(-1, -1)] = ctx.div(pl_minus, ctx.mul(out[SignPair(1, -1)], f_minus))
        elif SignPair(-1, -1) in out and SignPair(1, -1) not in out:
            out[SignPair(1, -1)] = ctx.div(pl_minus, ctx.mul(out[SignPair(-1, -1)], f_minus))

    def solve_mp():
        # pk_minus = P[--] * P[-+] * f_minus2
        if SignPair(-1, -1) in out and SignPair(-1, 1) not in out:
            out[SignPair(-1, 1)] = ctx.div(pk_minus, ctx.mul(out[SignPair(-1, -1)], f_minus2))
        elif SignPair(-1, 1) in out and SignPair(-1, -1) not in out:
            out[SignPair(-1, -1)] = ctx.div(pk_minus, ctx.mul(out[SignPair(-1, 1)], f_minus2))

    for _ in range(3):
        solve_pp_pm()
        solve_mm()
        solve_mp()
    assert len(out) == 4
    return out


@dataclass(frozen=True)
class DetRoot:
    """One of the branch-free square roots a1, a2, a3."""

    kind: str
    value: int


_CASE_CLASS = {"a1": (1, -1), "a2": (-1, 1), "a3": (-1, -1)}


def det_sqrt(ctx: FieldCtx, frame: NormalizedFrame, case: str, *,
             reciprocal_unit: bool = False) -> DetRoot:
    """Deterministic square-root quantity for the given square-class case.

    a1 = (u^m - u^-m)/(u - 1/u), a2 = <u^m>, a3 = <(-u)^m>, where
    r = <u> and m = (q - eps)/4.  Passing reciprocal_unit=True replaces u
    by 1/u; the result must not change (tested, not assumed).
    """
    if case not in _CASE_CLASS:
        raise ValueError(f"unknown case {case!r}")
    if isinstance(frame.tau, _Infinity) or frame.tau in (0, ctx.minus_one):
        raise ValueError("cases a1/a2/a3 need tau outside {0, -1, inf}")
    cls = (ctx.legendre(frame.tau), ctx.legendre(ctx.add(frame.tau, ctx.one)))
    if cls != _CASE_CLASS[case]:
        raise ValueError(f"square classes {cls} do not match case {case}")

    u = ext2_solve_unit(ctx, frame.r)
    if reciprocal_unit:
        u = ctx.e2_inv(u)
    one2 = ctx.e2_embed(ctx.one)
    assert ctx.e2_mul(u, u) != one2, "u^2 = 1 is impossible for tau outside {0, inf}"
    um = ctx.e2_pow(u, ctx.m)
    umi = ctx.e2_inv(um)
    if case == "a1":
        num = ctx.e2_sub(um, umi)
        den = ctx.e2_sub(u, ctx.e2_inv(u))
        val = ctx.e2_project(ctx.e2_div(num, den))
        want = ctx.div(ctx.from_int(-4),
                       ctx.sub(ctx.mul(frame.r, frame.r), ctx.from_int(4)))
    elif case == "a2":
        val = ctx.e2_project(ctx.e2_add(um, umi))
        want = frame.l
    else:
        bracket = ctx.e2_project(ctx.e2_add(um, umi))
        sign2 = ctx.legendre(ctx.from_int(2))  # (-1)^m
        val = bracket if sign2 == 1 else ctx.neg(bracket)
        want = frame.j
    assert ctx.mul(val, val) == want, "square identity for the det root failed"
    return DetRoot(kind=case, value=val)


def named_sqrts(ctx: FieldCtx, frame: NormalizedFrame, root: DetRoot) -> dict[str, int]:
    """The square roots each case determines (keys name the radicand)."""
    two = ctx.from_int(2)
    if root.kind == "a1":
        s = ctx.div(two, ctx.mul(root.value, frame.l))
        return {"tau": s}
    if root.kind == "a2":
        return {"l": root.value, "tau+1": ctx.div(two, root.value)}
    return {"j": root.value, "tau/(tau+1)": ctx.div(root.value, two)}


def _sign_elem(ctx: FieldCtx, s: int) -> int:
    return ctx.one if s == 1 else ctx.minus_one


def _specific_row(ctx: FieldCtx, frame: NormalizedFrame) -> Optional[dict[SignPair, int]]:
    """Values for tau in {0, inf, 1, 3, 1/3}, or None."""
    q = ctx.q
    e = ctx.eps
    chi2 = ctx.legendre(ctx.from_int(2))
    el = ctx.from_int

    def row(pp, pm, mp, mm):
        return {SignPair(1, 1): pp, SignPair(1, -1): pm,
                SignPair(-1, 1): mp, SignPair(-1, -1): mm}

    if frame.j == 0:  # tau = 0, (j,l) = (0,4)
        c = _sign_elem(ctx, e * chi2)  # character of -2
        d = _sign_elem(ctx, chi2)
        return row(ctx.div(c, el(4)), c, ctx.div(d, el(2)), ctx.mul(d, el(2)))
    if frame.l == 0:  # tau = inf, (j,l) = (4,0)
        c = _sign_elem(ctx, e)
        return row(ctx.neg(ctx.div(c, el(4))), ctx.div(c, el(2)), ctx.one, el(2))
    if frame.j == el(2) and frame.l == el(2):  # tau = 1
        s_lo = _sign_elem(ctx, (-1) ** (q // 8))
        s_hi = _sign_elem(ctx, (-1) ** ((q + 3) // 8))
        if q % 8 in (1, 7):
            return row(ctx.div(s_lo, el(8)), s_lo, s_hi, ctx.mul(s_hi, el(2)))
        return row(s_lo, s_lo, s_hi, ctx.div(s_hi, el(4)))
    if frame.j == el(3) and frame.l == el(1):  # tau = 3 (p != 3 here)
        cm2 = _sign_elem(ctx, e * chi2)
        c2 = _sign_elem(ctx, chi2)
        if q % 12 in (1, 11):
            return row(ctx.div(cm2, el(6)), cm2, c2, ctx.mul(c2, el(2)))
        return row(ctx.neg(cm2), ctx.neg(ctx.mul(cm2, el(2))),
                   ctx.neg(ctx.div(c2, el(6))), ctx.neg(c2))
    if frame.j == el(1) and frame.l == el(3):  # tau = 1/3
        ce = _sign_elem(ctx, e)
        if q % 12 in (1, 11):
            return row(ctx.div(ce, el(6)), ce, ctx.one, el(2))
        return row(ce, ctx.div(ce, el(6)), ctx.neg(el(2)), ctx.minus_one)
    return None


def _all_square_row(ctx: FieldCtx, frame: NormalizedFrame) -> dict[SignPair, int]:
    """The two rows for tau and tau+1 both nonzero squares.

    Keyed by the common square class of 1 +/- sqrt(l)/2; the two branches
    must agree, which is asserted rather than assumed.
    """
    el = ctx.from_int
    half = ctx.inv(el(2))
    rt = ctx.sqrt_canonical(frame.l)
    mu_plus = ctx.legendre(ctx.add(ctx.one, ctx.mul(rt, half)))
    mu_minus = ctx.legendre(ctx.sub(ctx.one, ctx.mul(rt, half)))
    assert mu_plus == mu_minus != 0, "branch dependence in the all-square class"
    ce = _sign_elem(ctx, ctx.eps)
    jl2 = ctx.mul(el(2), ctx.mul(frame.j, frame.l))
    vals = {SignPair(1, 1): ctx.div(ce, jl2), SignPair(1, -1): ce,
            SignPair(-1, 1): ctx.one, SignPair(-1, -1): el(2)}
    if mu_plus == 1:
        return vals
    return {sp: ctx.neg(v) for sp, v in vals.items()}


def _mixed_class_row(ctx: FieldCtx, frame: NormalizedFrame) -> dict[SignPair, int]:
    """Rows for the three square-class patterns with a nonsquare present."""
    el = ctx.from_int
    two = el(2)
    tau = frame.tau
    tau1 = ctx.add(tau, ctx.one)
    cls = (ctx.legendre(tau), ctx.legendre(tau1))
    chi2 = _sign_elem(ctx, ctx.legendre(two))
    ce = _sign_elem(ctx, ctx.eps)
    if cls == (1, -1):
        a1 = det_sqrt(ctx, frame, "a1").value
        c = ctx.mul(chi2, named_sqrts(ctx, frame, DetRoot("a1", a1))["tau"])
        return {
            SignPair(1, 1): ctx.neg(ctx.div(tau1, ctx.mul(two, c))),
            SignPair(1, -1): ctx.neg(c),
            SignPair(-1, 1): ctx.div(ce, c),
            SignPair(-1, -1): ctx.div(ctx.mul(ce, tau1), ctx.mul(el(8), c)),
        }
    if cls == (-1, 1):
        a2 = det_sqrt(ctx, frame, "a2").value
        c = ctx.mul(chi2, ctx.div(two, a2))  # chi(2) * sqrt(tau+1)
        return {
            SignPair(1, 1): ctx.div(ctx.mul(ce, c), two),
            SignPair(1, -1): ctx.mul(ce, c),
            SignPair(-1, 1): ctx.div(ctx.mul(c, tau1), ctx.mul(el(16), tau)),
            SignPair(-1, -1): ctx.div(two, c),
        }
    if cls == (-1, -1):
        a3 = det_sqrt(ctx, frame, "a3").value
        c = ctx.div(a3, two)  # sqrt(tau/(tau+1))
        return {
            SignPair(1, 1): ctx.neg(ctx.div(ce, ctx.mul(two, c))),
            SignPair(1, -1): ctx.neg(ctx.div(ctx.mul(ce, tau1), ctx.mul(el(16), c))),
            SignPair(-1, 1): ctx.inv(c),
            SignPair(-1, -1): ctx.mul(two, c),
        }
    raise AssertionError("all-square class must be dispatched earlier")


def prod_T_values(ctx: FieldCtx, j: int, l: int) -> dict[SignPair, int]:
    """All four T_{j,l} products for a normalized pair (j + l = 4)."""
    frame = frame_from_pair(ctx, j, l)
    vals = _specific_row(ctx, frame)
    if vals is not None:
        return vals
    if (ctx.legendre(frame.tau), ctx.legendre(ctx.add(frame.tau, ctx.one))) == (1, 1):
        return _all_square_row(ctx, frame)
    return _mixed_class_row(ctx, frame)


def prod_T_closed(ctx: FieldCtx, j: int, l: int, signs) -> int:
    """Closed form of the T_{j,l} product for normalized (j, l)."""
    return prod_T_values(ctx, j, l)[SignPair(*signs)]


def rescale_T(ctx: FieldCtx, j_prime: int, l_prime: int, signs) -> int:
    """T-product for arbitrary parameters, via the rescaling correction.

    Public entry point: divides out lambda = (j'+l')/4, twists the signs
    by the character of lambda, and multiplies back lambda^(m-beta-gamma)
    where the exponent counts the members of the normalized family.
    """
    e1, e2 = SignPair(*signs)
    s = ctx.add(j_prime, l_prime)
    if s == 0:
        raise ValueError("j' + l' must be nonzero")
    lam = ctx.div(s, ctx.from_int(4))
    nu = ctx.legendre(s)
    j = ctx.div(j_prime, lam)
    l = ctx.div(l_prime, lam)
    beta = 1 if (ctx.legendre(j_prime) == e1 and ctx.legendre(l_prime) == e2) else 0
    gamma = 1 if (nu == ctx.eps * e1 == e2) or (ctx.eps == -1 and nu * e1 == 1) else 0
    base = prod_T_closed(ctx, j, l, (nu * e1, nu * e2))
    return ctx.mul(ctx.pow(lam, ctx.m - beta - gamma), base)


def prod_S_closed(ctx: FieldCtx, k: int, l: int, signs) -> int:
    """Closed S_{k,l} product, routed through the T-product formulas."""
    e1, e2 = SignPair(*signs)
    return rescale_T(ctx, ctx.neg(k), l, (ctx.eps * e1, e2))


def swap_T(ctx: FieldCtx, j: int, l: int, mu: int) -> int:
    """Product of T_{l,j}^{mu,mu} computed from the T_{j,l}^{mu,mu} one."""
    if mu not in (1, -1):
        raise ValueError("mu must be +1 or -1")
    s = ctx.add(j, l)
    if s == 0:
        raise ValueError("j + l must be nonzero")
    base = rescale_T(ctx, j, l, (mu, mu))
    factor = mu * ctx.legendre(ctx.from_int(2)) * ctx.legendre(s)
    if not (ctx.legendre(j) == ctx.legendre(l) == mu):
        factor = -factor
    return base if factor == 1 else ctx.neg(base)


@dataclass(frozen=True)
class TripleVerdict:
    lhs: int        # chi(c+a)
    rhs: int        # chi(2) * chi(c+b)
    equal: bool
    nonzero: bool
    sym_a: bool     # chi(c+a) == chi(c-a)
    sym_b: bool     # chi(c+b) == chi(c-b)

    @property
    def ok(self) -> bool:
        return self.equal and self.nonzero and self.sym_a and self.sym_b


def legendre_triple_identity(ctx: FieldCtx, a: int, b: int, c: int) -> TripleVerdict:
    """Character relations on a Pythagorean triple a^2 + b^2 = c^2, ab != 0."""
    if a == 0 or b == 0:
        raise ValueError("ab must be nonzero")
    lhs_sq = ctx.add(ctx.mul(a, a), ctx.mul(b, b))
    if lhs_sq != ctx.mul(c, c):
        raise ValueError("a^2 + b^2 = c^2 violated")
    lhs = ctx.legendre(ctx.add(c, a))
    rhs = ctx.legendre(ctx.from_int(2)) * ctx.legendre(ctx.add(c, b))
    return TripleVerdict(
        lhs=lhs, rhs=rhs,
        equal=lhs == rhs,
        nonzero=lhs != 0,
        sym_a=lhs == ctx.legendre(ctx.sub(c, a)),
        sym_b=ctx.legendre(ctx.add(c, b)) == ctx.legendre(ctx.sub(c, b)),
    )
