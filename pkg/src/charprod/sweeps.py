"""Exhaustive verification sweeps: every closed form against the oracle.

Each suite takes a field context and yields check rows; ``run_verify``
drives the suites over all prime powers in a range and emits one JSON
line per check.  A sweep passes only with zero mismatches, which is the
acceptance bar for the whole package.
"""

from __future__ import annotations

import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import charsets, closedform, correspondence, dickson, reciprocity
from .charsets import SIGN_PAIRS, sign_str
from .closedform import INF, tau_str
from .ffield import FieldCtx, mk_field, prime_power

ALL_SUITES = ("tables", "dickson", "cardinality", "correspondence",
              "reciprocity", "rescaling", "intro")

_SEED = 0x5EED


@dataclass
class SweepConfig:
    q_min: int
    q_max: int
    max_degree: int | None = 3
    suites: tuple[str, ...] = ALL_SUITES
    workers: int = 1
    report_path: str | None = None

    def validate(self) -> None:
        if self.q_min < 3:
            raise ValueError("q_min must be at least 3")
        if not self.suites:
            raise ValueError("at least one suite is required")
        unknown = set(self.suites) - set(ALL_SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {sorted(unknown)}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def prime_powers(q_min: int, q_max: int,
                 max_degree: int | None = None) -> list[tuple[int, int, int]]:
    """Odd prime powers q in [q_min, q_max] as (q, p, n), ordered by q."""
    out = []
    for q in range(max(3, q_min), q_max + 1):
        if q % 2 == 0:
            continue
        pp = prime_power(q)
        if pp is None:
            continue
        p, n = pp
        if max_degree is not None and n > max_degree:
            continue
        out.append((q, p, n))
    return out


def _row(case: str, expected: str, actual: str) -> dict:
    return {"case": case, "expected": expected, "actual": actual,
            "ok": expected == actual}


def _rng(ctx: FieldCtx, salt: str) -> random.Random:
    return random.Random(f"{_SEED}:{ctx.q}:{salt}")


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_tables(ctx: FieldCtx) -> Iterator[dict]:
    """Normalized T-products: closed form vs oracle, all tau, all signs."""
    taus = [INF] + [t for t in range(ctx.q) if t != ctx.minus_one]
    for tau in taus:
        frame = closedform.normalized_frame(ctx, tau)
        for sp in SIGN_PAIRS:
            closed = closedform.prod_T_closed(ctx, frame.j, frame.l, sp)
            rescaled = closedform.rescale_T(ctx, frame.j, frame.l, sp)
            brute = charsets.brute_product(
                ctx, charsets.t_family(frame.j, frame.l, sp), members_cap=0).value
            actual = ctx.elem_str(closed) if closed == rescaled else \
                f"closed={ctx.elem_str(closed)} rescaled={ctx.elem_str(rescaled)}"
            yield _row(f"T[{tau_str(tau, ctx)}]{sign_str(sp)}",
                       ctx.elem_str(brute), actual)


def suite_rescaling(ctx: FieldCtx) -> Iterator[dict]:
    """Random unnormalized products, swaps, and quadruple completions."""
    rng = _rng(ctx, "rescaling")
    pairs = []
    while len(pairs) < 20:
        jp, lp = rng.randrange(ctx.q), rng.randrange(ctx.q)
        if ctx.add(jp, lp) != 0:
            pairs.append((jp, lp))
    for jp, lp in pairs:
        for sp in SIGN_PAIRS:
            got = closedform.rescale_T(ctx, jp, lp, sp)
            want = charsets.brute_product(
                ctx, charsets.t_family(jp, lp, sp), members_cap=0).value
            yield _row(f"rescale[{ctx.elem_str(jp)},{ctx.elem_str(lp)}]{sign_str(sp)}",
                       ctx.elem_str(want), ctx.elem_str(got))
    for _ in range(3):
        j, l = rng.randrange(ctx.q), rng.randrange(ctx.q)
        if ctx.add(j, l) == 0:
            continue
        for mu in (1, -1):
            got = closedform.swap_T(ctx, j, l, mu)
            want = charsets.brute_product(
                ctx, charsets.t_family(l, j, (mu, mu)), members_cap=0).value
            yield _row(f"swap[{ctx.elem_str(j)},{ctx.elem_str(l)}]{sign_str((mu, mu))}",
                       ctx.elem_str(want), ctx.elem_str(got))
    for _ in range(2):
        k, l = rng.randrange(ctx.q), rng.randrange(ctx.q)
        if k == l:
            continue
        brute = {sp: charsets.brute_product(
            ctx, charsets.s_family(k, l, sp), members_cap=0).value
            for sp in SIGN_PAIRS}
        seed_sp = SIGN_PAIRS[rng.randrange(4)]
        quad = closedform.quadruple_from_one(ctx, k, l, (seed_sp, brute[seed_sp]))
        want = " ".join(ctx.elem_str(brute[sp]) for sp in SIGN_PAIRS)
        got = " ".join(ctx.elem_str(quad[sp]) for sp in SIGN_PAIRS)
        yield _row(f"quadruple[{ctx.elem_str(k)},{ctx.elem_str(l)}]"
                   f"seed{sign_str(seed_sp)}", want, got)


def suite_dickson(ctx: FieldCtx) -> Iterator[dict]:
    """Coefficient-exact polynomial identities D_m and E_{m-1}."""
    for name, poly, signs in (
            ("D_m", dickson.dickson_first(ctx, ctx.m), (-ctx.eps, -1)),
            ("E_m-1", dickson.dickson_second(ctx, ctx.m - 1), (ctx.eps, 1))):
        target = charsets.vanishing_poly(ctx, *signs)
        ok = poly == target
        detail = "identical-coefficients"
        if not ok:
            i = next(i for i in range(max(len(poly), len(target)))
                     if (poly[i:i + 1] or [None]) != (target[i:i + 1] or [None]))
            detail = f"mismatch-at-degree-{i}"
        yield _row(f"dickson[{name}=f{sign_str(signs)}]",
                   "identical-coefficients", detail)


def suite_cardinality(ctx: FieldCtx) -> Iterator[dict]:
    """Closed cardinalities against matrix-counted enumerations, all pairs.

    Fields too large for dense tables get only the linear-cost checks
    (the four A_{0,1} families, the single-condition counts, and the
    random spot checks); the all-pairs grid needs the tables.
    """
    import numpy as np

    if not ctx.tables_allowed():
        for sp in SIGN_PAIRS:
            fam = charsets.a_family(0, 1, sp)
            want = len(charsets.enumerate_family(ctx, fam))
            yield _row(f"card[A01]{sign_str(sp)}", str(want),
                       str(charsets.card_closed(ctx, fam)))
        for e in (1, -1):
            fam = charsets.s1_family(ctx.one, e)
            want = len(charsets.enumerate_family(ctx, fam))
            yield _row(f"card[S1]{sign_str(e)}", str(want),
                       str(charsets.card_closed(ctx, fam)))
        return

    tb = ctx.tables()
    chi = tb.np_chi
    q = ctx.q
    shifted = chi[tb.np_add]              # shifted[k, a] = chi(k + a)
    reflect = chi[tb.np_add[:, tb.np_neg]]  # reflect[j, a] = chi(j - a)
    offdiag = ~np.eye(q, dtype=bool)
    tmask = tb.np_add != 0                # j + l != 0
    for sp in SIGN_PAIRS:
        x1 = (shifted == sp.e1).astype(np.int64)
        x2 = (shifted == sp.e2).astype(np.int64)
        y1 = (reflect == sp.e1).astype(np.int64)
        a_counts = x1 @ x2.T
        x1s, x2s, y1s = x1.copy(), x2.copy(), y1.copy()
        x1s[:, 0] = x2s[:, 0] = y1s[:, 0] = 0
        s_counts = x1s @ x2s.T
        t_counts = y1s @ x2s.T
        for kind, counts, valid in (("A", a_counts, offdiag),
                                    ("S", s_counts, offdiag),
                                    ("T", t_counts, tmask)):
            fams = {"A": charsets.a_family, "S": charsets.s_family,
                    "T": charsets.t_family}[kind]
            bad = 0
            first = ""
            for k in range(q):
                row = counts[k]
                ok_row = valid[k]
                for l in range(q):
                    if not ok_row[l]:
                        continue
                    if charsets.card_closed(ctx, fams(k, l, sp)) != row[l]:
                        bad += 1
                        if not first:
                            first = f" first=({ctx.elem_str(k)},{ctx.elem_str(l)})"
            yield _row(f"card[{kind}]{sign_str(sp)}", "0 mismatches",
                       f"{bad} mismatches{first}")
    for e in (1, -1):
        counts = (shifted == e)
        counts[:, 0] = False
        sums = counts.sum(axis=1)
        bad = sum(1 for k in range(q)
                  if charsets.card_closed(ctx, charsets.s1_family(k, e)) != sums[k])
        yield _row(f"card[S1]{sign_str(e)}", "0 mismatches", f"{bad} mismatches")
    rng = _rng(ctx, "card-spot")
    for _ in range(10):
        k, l = rng.randrange(q), rng.randrange(q)
        sp = SIGN_PAIRS[rng.randrange(4)]
        kind = ("A", "S", "T")[rng.randrange(3)]
        if kind in ("A", "S") and k == l:
            continue
        if kind == "T" and ctx.add(k, l) == 0:
            continue
        fam = {"A": charsets.a_family, "S": charsets.s_family,
               "T": charsets.t_family}[kind](k, l, sp)
        want = len(charsets.enumerate_family(ctx, fam))
        got = charsets.card_closed(ctx, fam)
        yield _row(f"card-spot[{fam.label(ctx)}]", str(want), str(got))


def suite_correspondence(ctx: FieldCtx) -> Iterator[dict]:
    """Orbit bijection, order classification, and orbit counting."""
    orbits = correspondence.all_orbits(ctx)
    yield _row("orbit-count", str(ctx.q), str(len(orbits)))
    taus = sorted(correspondence.tau_of_orbit(ctx, o.rep) for o in orbits)
    yield _row("orbit-image", "all-of-F_q",
               "all-of-F_q" if taus == list(range(ctx.q)) else "not-injective")
    by_tau = {correspondence.tau_of_orbit(ctx, o.rep): o for o in orbits}
    bad = sum(1 for t in range(ctx.q)
              if correspondence.orbit_of_tau(ctx, t) != by_tau[t])
    yield _row("orbit-roundtrip", "0 mismatches", f"{bad} mismatches")
    bad = 0
    for t in range(ctx.q):
        try:
            cls = correspondence.classify_tau(ctx, t)
        except AssertionError:
            bad += 1
            continue
        if cls is None and t not in (0, ctx.minus_one):
            bad += 1
    yield _row("v-correspondence", "0 mismatches", f"{bad} mismatches")
    for sp in SIGN_PAIRS:
        want = charsets.card_closed(ctx, charsets.a_family(0, 1, sp))
        got = correspondence.orbit_count_card(ctx, sp.e1, sp.e2)
        yield _row(f"orbit-card{sign_str(sp)}", str(want), str(got))


def suite_reciprocity(ctx: FieldCtx) -> Iterator[dict]:
    """Nested-radical classes, towers, and quadratic-irrational products."""
    try:
        reciprocity.sqrt2_tower_class(ctx)
        yield _row("biquad-sqrt2", "consistent", "consistent")
    except AssertionError as exc:
        yield _row("biquad-sqrt2", "consistent", f"failed: {exc}")
    for base in ("sqrt2", "sqrt3", "golden"):
        if (2 * reciprocity.BASE_ORDERS[base]) % ctx.p == 0:
            continue
        spec = reciprocity.TowerSpec(base, 5)
        want = "".join("1" if b else "0"
                       for b in reciprocity.tower_congruences(ctx.q, spec))
        try:
            got = "".join("1" if b else "0"
                          for b in reciprocity.radical_tower_membership(ctx, spec))
        except AssertionError as exc:
            got = f"failed: {exc}"
        yield _row(f"tower[{base}]", want, got)
    for base, rad in (("sqrt2", 2), ("sqrt3", 3), ("golden", 5)):
        if rad % ctx.p == 0 or ctx.legendre(ctx.from_int(rad)) != 1:
            continue
        for rs in (1, -1):
            try:
                reciprocity.prod_T_quadratic_irrational(ctx, base, root_sign=rs)
                got = "verified"
            except AssertionError as exc:
                got = f"failed: {exc}"
            yield _row(f"quadirr[{base}]root{'+' if rs > 0 else '-'}",
                       "verified", got)
    for d in (8, 10, 12):
        if d % ctx.p == 0:
            continue
        try:
            reciprocity.special_angle_bracket(ctx, d)
            got = "verified"
        except AssertionError as exc:
            got = f"failed: {exc}"
        yield _row(f"special-angle[{d}]", "verified", got)


def suite_intro(ctx: FieldCtx) -> Iterator[dict]:
    """The two opening product identities and the abstract's example."""
    two = ctx.from_int(2)
    four = ctx.from_int(4)
    chi2 = ctx.legendre(two)
    cases = (
        ("intro[a,4-a nonsquares]", charsets.t_family(four, 0, (-1, -1)), two),
        ("intro[-a,4+a nonsquares]", charsets.t_family(0, four, (-1, -1)),
         two if chi2 == 1 else ctx.neg(two)),
        ("intro[1-a,3+a nonsquares]",
         charsets.t_family(ctx.one, ctx.from_int(3), (-1, -1)),
         two if ctx.q % 12 in (1, 11) else ctx.minus_one),
    )
    for case, fam, want in cases:
        got = charsets.brute_product(ctx, fam, members_cap=0).value
        yield _row(case, ctx.elem_str(want), ctx.elem_str(got))


SUITE_FUNCS: dict[str, Callable[[FieldCtx], Iterator[dict]]] = {
    "tables": suite_tables,
    "dickson": suite_dickson,
    "cardinality": suite_cardinality,
    "correspondence": suite_correspondence,
    "reciprocity": suite_reciprocity,
    "rescaling": suite_rescaling,
    "intro": suite_intro,
}

# suites that benefit from the dense tables
_TABLE_SUITES = {"tables", "dickson", "cardinality", "correspondence",
                 "rescaling", "intro"}


def run_field(p: int, n: int, suites: Iterable[str]) -> list[dict]:
    """All requested checks for one field, as finished report rows."""
    ctx = mk_field(p, n)
    if ctx.tables_allowed() and _TABLE_SUITES & set(suites):
        ctx.tables()
    rows = []
    for name in suites:
        for row in SUITE_FUNCS[name](ctx):
            row.update(q=ctx.q, suite=name)
            rows.append(row)
    return rows


def _run_field_args(args) -> list[dict]:
    return run_field(*args)


def run_verify(config: SweepConfig, stream=None) -> int:
    """Run the sweep, emit JSON lines, return the exit code (0 iff clean)."""
    config.validate()
    close_me = None
    if stream is None:
        if config.report_path:
            stream = close_me = open(config.report_path, "w", encoding="utf-8")
        else:
            stream = sys.stdout
    mismatches = 0
    try:
        fields = prime_powers(config.q_min, config.q_max, config.max_degree)
        jobs = [(p, n, tuple(config.suites)) for _, p, n in fields]
        if config.workers > 1:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                results = pool.map(_run_field_args, jobs)
                for rows in results:
                    for row in rows:
                        mismatches += not row["ok"]
                        stream.write(json.dumps(row) + "\n")
        else:
            for job in jobs:
                for row in _run_field_args(job):
                    mismatches += not row["ok"]
                    stream.write(json.dumps(row) + "\n")
    finally:
        if close_me is not None:
            close_me.close()
    return 0 if mismatches == 0 else 1
