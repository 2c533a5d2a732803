"""Set families cut out by quadratic character conditions, and their oracle.

Four kinds of family over F_q (signs are +1/-1, written +/- in text):

  S1  S_k^e          = {a in F_q^* : chi(a+k) = e}
  S   S_{k,l}^{e1,e2} = {a in F_q^* : chi(a+k) = e1, chi(a+l) = e2},  k != l
  A   A_{k,l}^{e1,e2} = same conditions but a ranges over all of F_q
  T   T_{j,l}^{e1,e2} = {a in F_q^* : chi(j-a) = e1, chi(l+a) = e2},  j+l != 0

chi is the quadratic character; a chi value of 0 never matches a sign.
``brute_product`` multiplies the members found by a full scan of the
field.  It is the oracle every closed formula in this package is tested
against, so it deliberately takes no shortcuts.  ``card_closed`` is the
closed-form cardinality (never enumerates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .dickson import poly_trim
from .ffield import FieldCtx

MEMBERS_CAP = 10_000


class SignPair(NamedTuple):
    e1: int
    e2: int


SIGN_PAIRS = (SignPair(1, 1), SignPair(1, -1), SignPair(-1, 1), SignPair(-1, -1))

_SIGN_CHR = {1: "+", -1: "-"}


def sign_str(signs) -> str:
    try:
        return "".join(_SIGN_CHR[s] for s in signs)
    except TypeError:
        return _SIGN_CHR[signs]


def parse_signs(text: str):
    vals = []
    for ch in text:
        if ch == "+":
            vals.append(1)
        elif ch == "-":
            vals.append(-1)
        else:
            raise ValueError(f"bad sign character {ch!r}")
    if len(vals) == 1:
        return vals[0]
    if len(vals) == 2:
        return SignPair(*vals)
    raise ValueError(f"expected one or two signs, got {text!r}")


@dataclass(frozen=True)
class SetFamily:
    """Symbolic description of one A/S/S1/T family."""

    kind: str  # "A", "S", "S1", "T"
    params: tuple[int, ...]
    signs: tuple  # SignPair, or a single sign for S1

    def validate(self, ctx: FieldCtx) -> None:
        if self.kind not in ("A", "S", "S1", "T"):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "S1":
            if len(self.params) != 1 or self.signs not in (1, -1):
                raise ValueError("S1 takes one parameter and one sign")
            return
        if len(self.params) != 2:
            raise ValueError(f"{self.kind} takes two parameters")
        e1, e2 = self.signs
        if e1 not in (1, -1) or e2 not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        x, y = self.params
        if self.kind in ("A", "S") and x == y:
            raise ValueError(f"{self.kind} family requires k != l")
        if self.kind == "T" and ctx.add(x, y) == 0:
            raise ValueError("T family requires j + l != 0")

    def label(self, ctx: FieldCtx) -> str:
        ps = " ".join(ctx.elem_str(x) for x in self.params)
        return f"{self.kind} {ps} {sign_str(self.signs)}"


def a_family(k: int, l: int, signs) -> SetFamily:
    return SetFamily("A", (k, l), SignPair(*signs))


def s_family(k: int, l: int, signs) -> SetFamily:
    return SetFamily("S", (k, l), SignPair(*signs))


def s1_family(k: int, sign: int) -> SetFamily:
    return SetFamily("S1", (k,), sign)


def t_family(j: int, l: int, signs) -> SetFamily:
    return SetFamily("T", (j, l), SignPair(*signs))


@dataclass(frozen=True)
class ProductReport:
    value: int
    cardinality: int
    members: Optional[list[int]]


def _scan_scalar(ctx: FieldCtx, fam: SetFamily) -> list[int]:
    chi = ctx.legendre
    out = []
    if fam.kind == "S1":
        (k,), e = fam.params, fam.signs
        for a in range(1, ctx.q):
            if chi(ctx.add(a, k)) == e:
                out.append(a)
    elif fam.kind in ("A", "S"):
        (k, l), (e1, e2) = fam.params, fam.signs
        start = 0 if fam.kind == "A" else 1
        for a in range(start, ctx.q):
            if chi(ctx.add(a, k)) == e1 and chi(ctx.add(a, l)) == e2:
                out.append(a)
    else:
        (j, l), (e1, e2) = fam.params, fam.signs
        for a in range(1, ctx.q):
            if chi(ctx.sub(j, a)) == e1 and chi(ctx.add(l, a)) == e2:
                out.append(a)
    return out


def _scan_vector(ctx: FieldCtx, fam: SetFamily) -> list[int]:
    tb = ctx.tables()
    chi = tb.np_chi
    if fam.kind == "S1":
        (k,), e = fam.params, fam.signs
        mask = chi[tb.np_add[k]] == e
        mask[0] = False
    elif fam.kind in ("A", "S"):
        (k, l), (e1, e2) = fam.params, fam.signs
        mask = (chi[tb.np_add[k]] == e1) & (chi[tb.np_add[l]] == e2)
        if fam.kind == "S":
            mask[0] = False
    else:
        (j, l), (e1, e2) = fam.params, fam.signs
        mask = (chi[tb.np_add[j][tb.np_neg]] == e1) & (chi[tb.np_add[l]] == e2)
        mask[0] = False
    import numpy as np

    return np.nonzero(mask)[0].tolist()


def enumerate_family(ctx: FieldCtx, fam: SetFamily) -> list[int]:
    """Exact member list by scanning the whole field, canonically sorted.

    Uses the vectorized scan when the context has its dense tables built
    (``ctx.tables()``), a plain scan otherwise; both visit every element.
    """
    fam.validate(ctx)
    vector = ctx._tables is not None
    members = (_scan_vector if vector else _scan_scalar)(ctx, fam)
    if ctx.n > 1:
        members.sort(key=ctx.elem_key)
    return members


def brute_product(ctx: FieldCtx, fam: SetFamily,
                  members_cap: int = MEMBERS_CAP) -> ProductReport:
    """Oracle product over the enumerated members (empty product is 1)."""
    members = enumerate_family(ctx, fam)
    value = ctx.one
    for a in members:
        value = ctx.mul(value, a)
    kept = members if len(members) <= members_cap else None
    return ProductReport(value=value, cardinality=len(members), members=kept)


def _a_base_card(ctx: FieldCtx, e1: int, e2: int) -> int:
    # |A_{0,1}^{e1,e2}| in terms of m and eps
    if (e1, e2) == (1, 1):
        return ctx.m - 1
    if (e1, e2) == (1, -1):
        return ctx.m
    return ctx.m + (ctx.eps - 1) // 2


def card_closed(ctx: FieldCtx, fam: SetFamily) -> int:
    """Closed-form cardinality; never enumerates."""
    fam.validate(ctx)
    if fam.kind == "S1":
        (k,), e = fam.params, fam.signs
        if k == 0:
            return (ctx.q - 1) // 2
        return (ctx.q - 3) // 2 if ctx.legendre(k) == e else (ctx.q - 1) // 2
    if fam.kind == "A":
        (k, l), (e1, e2) = fam.params, fam.signs
        nu = ctx.legendre(ctx.sub(l, k))
        return _a_base_card(ctx, nu * e1, nu * e2)
    if fam.kind == "S":
        (k, l), (e1, e2) = fam.params, fam.signs
        drop = 1 if (ctx.legendre(k) == e1 and ctx.legendre(l) == e2) else 0
        return card_closed(ctx, a_family(k, l, (e1, e2))) - drop
    (j, l), (e1, e2) = fam.params, fam.signs
    base = card_closed(ctx, a_family(ctx.neg(j), l, (ctx.eps * e1, e2)))
    drop = 1 if (ctx.legendre(j) == e1 and ctx.legendre(l) == e2) else 0
    return base - drop


def vanishing_poly(ctx: FieldCtx, e1: int, e2: int) -> list[int]:
    """Monic polynomial whose root set is A_{-2,2}^{e1,e2}."""
    two = ctx.from_int(2)
    roots = enumerate_family(ctx, a_family(ctx.neg(two), two, (e1, e2)))
    coeffs = [ctx.one]
    for b in roots:
        nb = ctx.neg(b)
        nxt = [0] + coeffs
        for i in range(len(coeffs)):
            nxt[i] = ctx.add(nxt[i], ctx.mul(coeffs[i], nb))
        coeffs = nxt
    return poly_trim(coeffs)


def report_row(ctx: FieldCtx, fam: SetFamily, rep: ProductReport) -> dict:
    """JSON-ready report row for one family product."""
    return {
        "q": ctx.q,
        "family": fam.kind,
        "params": [ctx.elem_str(x) for x in fam.params],
        "signs": sign_str(fam.signs),
        "cardinality": rep.cardinality,
        "value": ctx.elem_str(rep.value),
    }
