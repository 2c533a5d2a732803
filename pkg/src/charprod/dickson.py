"""Dickson polynomials over F_q and polynomial evaluation.

Polynomials are lists of field elements (ints), little-endian, with no
trailing zeros; the zero polynomial is the empty list.  Both kinds obey
the three-term recursion f_{k+2} = x*f_{k+1} - f_k, with seeds (2, x)
for the first kind and (1, x) for the second.  The defining functional
equations are D_k(u + 1/u) = u^k + u^(-k) and
E_{k-1}(u + 1/u) = (u^k - u^(-k)) / (u - 1/u).
"""

from __future__ import annotations

from .ffield import Ext2Elem, FieldCtx


def poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_deg(f: list[int]) -> int:
    return len(f) - 1


def _dickson(ctx: FieldCtx, k: int, seed0: int) -> list[int]:
    if k == 0:
        return [seed0]
    prev = [seed0]
    cur = [0, ctx.one]
    for _ in range(k - 1):
        nxt = [0] + cur  # multiply by x
        for i, c in enumerate(prev):
            nxt[i] = ctx.sub(nxt[i], c)
        prev, cur = cur, nxt
    return cur


def dickson_first(ctx: FieldCtx, k: int) -> list[int]:
    """D_k as a coefficient vector over F_q (D_0 = 2, D_1 = x)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _dickson(ctx, k, ctx.from_int(2))


def dickson_second(ctx: FieldCtx, k: int) -> list[int]:
    """E_k as a coefficient vector over F_q (E_0 = 1, E_1 = x)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _dickson(ctx, k, ctx.one)


def poly_eval(ctx: FieldCtx, f: list[int], x: int) -> int:
    """Horner evaluation of f at x in F_q."""
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_eval_ext2(ctx: FieldCtx, f: list[int], x: Ext2Elem) -> Ext2Elem:
    """Horner evaluation at a point of F_{q^2}."""
    acc = Ext2Elem(0, 0)
    for c in reversed(f):
        acc = ctx.e2_add(ctx.e2_mul(acc, x), ctx.e2_embed(c))
    return acc


def poly_str(ctx: FieldCtx, f: list[int]) -> str:
    """Space-separated element texts, low degree first."""
    return " ".join(ctx.elem_str(c) for c in f)
