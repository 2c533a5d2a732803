"""Arithmetic in finite fields F_q = F_{p^n} for odd prime powers q.

Field elements are plain ints in range(q): the element with coefficient
vector (c0, c1, ..., c_{n-1}), little-endian in the root of the modulus,
is encoded as c0 + c1*p + ... + c_{n-1}*p^(n-1).  For n == 1 this is the
usual residue.  Tie-breaking (smallest square root, smallest nonsquare,
sorted member lists) uses the *canonical order*: coefficient vectors
compared lexicographically, low degree first.  ``FieldCtx.elem_key`` is
the corresponding sort key; it agrees with integer order only for n == 1.

The quadratic extension F_{q^2} is represented as pairs lo + hi*theta
with theta^2 = delta, delta the canonically smallest nonsquare of F_q.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Optional

MACHINE_BOUND = 1 << 31

# Full q x q tables are only built below this order; larger fields fall
# back to scalar arithmetic everywhere.
TABLE_LIMIT = 4096


class FieldError(ValueError):
    """Base class for field construction errors."""


class NotPrimeError(FieldError):
    """The characteristic is composite."""


class EvenCharacteristicError(FieldError):
    """The characteristic is 2 (only odd fields are supported)."""


class FieldTooLargeError(FieldError):
    """q exceeds the machine bound."""


def is_prime(m: int) -> bool:
    """Deterministic trial-division primality test."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def factorize(m: int) -> list[tuple[int, int]]:
    """Factor m > 0 by trial division; returns [(prime, exponent), ...]."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Write q as p^n with p prime, or return None."""
    if q < 2:
        return None
    p = None
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1 if d == 2 else 2
    if p is None:
        return (q, 1)
    m, n = q, 0
    while m % p == 0:
        m //= p
        n += 1
    return (p, n) if m == 1 else None


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, little-endian, trimmed)
# ---------------------------------------------------------------------------

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                c[i + j] = (c[i + j] + ai * bj) % p
    return _ptrim(c)


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic
    a = list(a)
    n = len(f) - 1
    while len(a) > n:
        lead = a.pop()
        if lead:
            for i in range(n):
                a[len(a) - n + i] = (a[len(a) - n + i] - lead * f[i]) % p
    return _ptrim(a)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # make b monic before reducing
        inv = pow(b[-1], p - 2, p)
        b = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _pow_mod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: f monic of degree n is irreducible over F_p."""
    n = len(f) - 1
    if n == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    x = [0, 1]
    # x^(p^n) == x (mod f)
    t = x
    for _ in range(n):
        t = _pow_mod(t, p, f, p)
    if _ptrim([(a - b) % p for a, b in itertools.zip_longest(t, x, fillvalue=0)]):
        return False
    for r, _ in factorize(n):
        t = x
        for _ in range(n // r):
            t = _pow_mod(t, p, f, p)
        diff = _ptrim([(a - b) % p for a, b in itertools.zip_longest(t, x, fillvalue=0)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def find_modulus(p: int, n: int) -> tuple[int, ...]:
    """Canonically smallest monic irreducible of degree n over F_p.

    Candidates are ordered by their coefficient vector (c0, ..., c_{n-1}),
    compared low degree first, which makes the choice reproducible.
    """
    if n == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=n):
        if low[0] == 0:
            continue  # x divides the candidate
        f = list(low) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Ext2Elem(NamedTuple):
    """Element lo + hi*theta of F_{q^2}, theta^2 = delta."""

    lo: int
    hi: int


class FieldTables:
    """Dense lookup tables for one field; built once per context.

    numpy arrays serve the vectorized set scans, the plain-list mirrors
    serve scalar hot loops (python-level indexing of a list is much
    faster than indexing a numpy array).
    """

    __slots__ = ("np_chi", "np_add", "np_neg", "chi", "neg", "mul", "inv")

    def __init__(self, ctx: "FieldCtx"):
        import numpy as np

        q, p, n = ctx.q, ctx.p, ctx.n
        if n == 1:
            ar = np.arange(q, dtype=np.int64)
            np_add = (ar[:, None] + ar[None, :]) % q
            np_mul = (ar[:, None] * ar[None, :]) % q
            np_neg = (q - ar) % q
        else:
            dig = np.zeros((q, n), dtype=np.int64)
            tmp = np.arange(q)
            for i in range(n):
                dig[:, i] = tmp % p
                tmp //= p
            pw = p ** np.arange(n)
            np_add = ((dig[:, None, :] + dig[None, :, :]) % p) @ pw
            np_neg = ((p - dig) % p) @ pw
            conv = np.zeros((q, q, 2 * n - 1), dtype=np.int64)
            for i in range(n):
                for j in range(n):
                    conv[:, :, i + j] += dig[:, None, i] * dig[None, :, j]
            red = np.array(ctx._red, dtype=np.int64)  # (n-1, n)
            coeffs = (conv[..., :n] + conv[..., n:] @ red) % p
            np_mul = coeffs @ pw
        self.np_chi = np.full(q, -1, dtype=np.int8)
        self.np_chi[np_mul.diagonal()] = 1
        self.np_chi[0] = 0
        self.np_add = np_add.astype(np.int32)
        self.np_neg = np_neg.astype(np.int32)
        self.chi = self.np_chi.tolist()
        self.neg = np_neg.tolist()
        inv = [0] * q
        rows, cols = np.nonzero(np_mul == 1)
        for r, c in zip(rows.tolist(), cols.tolist()):
            inv[r] = c
        self.inv = inv
        self.mul = np_mul.tolist() if n > 1 else None


class FieldCtx:
    """Immutable context for F_{p^n}; all element operations live here."""

    def __init__(self, p: int, n: int = 1):
        if p % 2 == 0:
            raise EvenCharacteristicError(f"characteristic must be odd, got p={p}")
        if not is_prime(p):
            raise NotPrimeError(f"p={p} is not prime")
        if n < 1:
            raise FieldError(f"extension degree must be >= 1, got n={n}")
        q = p ** n
        if q >= MACHINE_BOUND:
            raise FieldTooLargeError(f"q={q} exceeds the machine bound 2^31")
        self.p = p
        self.n = n
        self.q = q
        self.eps = 1 if q % 4 == 1 else -1
        self.m = (q - self.eps) // 4
        self.modulus = find_modulus(p, n)
        # reduction rows: x^(n+t) mod modulus, t = 0..n-2
        red = []
        if n > 1:
            rem = [(-c) % p for c in self.modulus[:n]]
            red.append(tuple(rem))
            for _ in range(n - 2):
                prev = red[-1]
                carry = prev[n - 1]
                row = [0] + list(prev[: n - 1])
                if carry:
                    for i in range(n):
                        row[i] = (row[i] + carry * rem[i]) % p
                red.append(tuple(row))
        self._red = tuple(red)
        self.one = 1
        self.minus_one = p - 1
        self._tables: FieldTables | None = None
        self._digits: list[tuple[int, ...]] | None = None
        self._delta: int | None = None

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n})"

    # -- encoding ----------------------------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of element a, little-endian, length n."""
        if self._digits is not None:
            return self._digits[a]
        if self.n == 1:
            return (a,)
        out = []
        for _ in range(self.n):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    # canonical sort key: low-degree-first lexicographic coefficient order
    elem_key = decode

    def encode(self, coeffs) -> int:
        acc, pw = 0, 1
        for c in coeffs:
            acc += (c % self.p) * pw
            pw *= self.p
        return acc

    def from_int(self, c: int) -> int:
        """Embed the integer c (image of c*1 in the prime subfield)."""
        return c % self.p

    def elements(self) -> range:
        return range(self.q)

    def elements_canonical(self) -> Iterator[int]:
        """All elements in canonical order."""
        if self.n == 1:
            yield from range(self.q)
            return
        for coeffs in itertools.product(range(self.p), repeat=self.n):
            yield self.encode(coeffs)

    def elem_str(self, a: int) -> str:
        """Textual form: decimal residue, or comma-separated coefficients."""
        if self.n == 1:
            return str(a)
        return ",".join(str(c) for c in self.decode(a))

    def parse_elem(self, text: str) -> int:
        """Inverse of elem_str; bare integers embed as constants."""
        text = text.strip()
        if "," in text:
            if self.n == 1:
                raise ValueError(f"coefficient list {text!r} in a prime field")
            coeffs = [int(t) for t in text.split(",")]
            if len(coeffs) != self.n:
                raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
            return self.encode(coeffs)
        return self.from_int(int(text))

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.q
        da, db = self.decode(a), self.decode(b)
        acc, pw = 0, 1
        for x, y in zip(da, db):
            acc += ((x + y) % self.p) * pw
            pw *= self.p
        return acc

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (self.q - a) % self.q
        if self._tables is not None:
            return self._tables.neg[a]
        acc, pw = 0, 1
        for x in self.decode(a):
            acc += ((self.p - x) % self.p) * pw
            pw *= self.p
        return acc

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.q
        if self._tables is not None:
            return self._tables.mul[a][b]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        p, n = self.p, self.n
        da, db = self.decode(a), self.decode(b)
        c = [0] * (2 * n - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    c[i + j] += ai * bj
        for t in range(n - 2, -1, -1):
            v = c[n + t]
            if v:
                row = self._red[t]
                for i in range(n):
                    c[i] += v * row[i]
        acc, pw = 0, 1
        for i in range(n):
            acc += (c[i] % p) * pw
            pw *= p
        return acc

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.n == 1:
            return pow(a, self.q - 2, self.q)
        if self._tables is not None:
            return self._tables.inv[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a^e for any integer e (negative exponents invert first)."""
        if e < 0:
            a = self.inv(a)
            e = -e
        if a == 0:
            return self.one if e == 0 else 0
        e %= self.q - 1
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # -- quadratic character and square roots --------------------------------

    def legendre(self, a: int) -> int:
        """The quadratic character of a: +1 square, -1 nonsquare, 0 zero."""
        if self._tables is not None:
            return self._tables.chi[a]
        if a == 0:
            return 0
        return 1 if self.pow(a, (self.q - 1) // 2) == self.one else -1

    @property
    def delta(self) -> int:
        """Canonically smallest nonsquare; theta^2 = delta defines F_{q^2}."""
        if self._delta is None:
            for x in self.elements_canonical():
                if self.legendre(x) == -1:
                    self._delta = x
                    break
        return self._delta

    def sqrt_canonical(self, a: int) -> Optional[int]:
        """Square root with canonically smaller coefficient vector.

        Returns None exactly when a is a nonsquare.
        """
        if a == 0:
            return 0
        if self.legendre(a) == -1:
            return None
        r = self._tonelli(a)
        rn = self.neg(r)
        return r if self.elem_key(r) <= self.elem_key(rn) else rn

    def _tonelli(self, a: int) -> int:
        # generic Tonelli-Shanks in the cyclic group F_q^*
        t, s = self.q - 1, 0
        while t % 2 == 0:
            t //= 2
            s += 1
        c = self.pow(self.delta, t)
        r = self.pow(a, (t + 1) // 2)
        x = self.pow(a, t)
        while x != self.one:
            i, y = 0, x
            while y != self.one:
                y = self.mul(y, y)
                i += 1
            b = self.pow(c, 1 << (s - i - 1))
            r = self.mul(r, b)
            c = self.mul(b, b)
            x = self.mul(x, c)
            s = i
        return r

    # -- tables ----------------------------------------------------------------

    def tables_allowed(self) -> bool:
        return self.q <= TABLE_LIMIT

    def tables(self) -> FieldTables:
        """Build (once) and return the dense lookup tables."""
        if self._tables is None:
            if not self.tables_allowed():
                raise FieldTooLargeError(
                    f"q={self.q} exceeds the table limit {TABLE_LIMIT}")
            if self.n > 1 and self._digits is None:
                dig = []
                for a in range(self.q):
                    out = []
                    x = a
                    for _ in range(self.n):
                        x, r = divmod(x, self.p)
                        out.append(r)
                    dig.append(tuple(out))
                self._digits = dig
            self._tables = FieldTables(self)
        return self._tables

    # -- quadratic extension F_{q^2} --------------------------------------------

    def e2_embed(self, a: int) -> Ext2Elem:
        return Ext2Elem(a, 0)

    def e2_is_base(self, x: Ext2Elem) -> bool:
        return x.hi == 0

    def e2_project(self, x: Ext2Elem) -> int:
        if x.hi != 0:
            raise ValueError(f"{x} does not lie in the base field")
        return x.lo

    def e2_key(self, x: Ext2Elem):
        return self.elem_key(x.lo) + self.elem_key(x.hi)

    def e2_add(self, x: Ext2Elem, y: Ext2Elem) -> Ext2Elem:
        return Ext2Elem(self.add(x.lo, y.lo), self.add(x.hi, y.hi))

    def e2_sub(self, x: Ext2Elem, y: Ext2Elem) -> Ext2Elem:
        return Ext2Elem(self.sub(x.lo, y.lo), self.sub(x.hi, y.hi))

    def e2_neg(self, x: Ext2Elem) -> Ext2Elem:
        return Ext2Elem(self.neg(x.lo), self.neg(x.hi))

    def e2_conj(self, x: Ext2Elem) -> Ext2Elem:
        """Frobenius x -> x^q, which is lo - hi*theta."""
        return Ext2Elem(x.lo, self.neg(x.hi))

    def e2_mul(self, x: Ext2Elem, y: Ext2Elem) -> Ext2Elem:
        lo = self.add(self.mul(x.lo, y.lo), self.mul(self.mul(x.hi, y.hi), self.delta))
        hi = self.add(self.mul(x.lo, y.hi), self.mul(x.hi, y.lo))
        return Ext2Elem(lo, hi)

    def e2_inv(self, x: Ext2Elem) -> Ext2Elem:
        nrm = self.sub(self.mul(x.lo, x.lo),
                       self.mul(self.mul(x.hi, x.hi), self.delta))
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in F_{q^2}")
        ninv = self.inv(nrm)
        return Ext2Elem(self.mul(x.lo, ninv), self.mul(self.neg(x.hi), ninv))

    def e2_div(self, x: Ext2Elem, y: Ext2Elem) -> Ext2Elem:
        return self.e2_mul(x, self.e2_inv(y))

    def e2_pow(self, x: Ext2Elem, e: int) -> Ext2Elem:
        if e < 0:
            x = self.e2_inv(x)
            e = -e
        if x == (0, 0):
            return x if e else Ext2Elem(self.one, 0)
        e %= self.q * self.q - 1
        result = Ext2Elem(self.one, 0)
        while e:
            if e & 1:
                result = self.e2_mul(result, x)
            x = self.e2_mul(x, x)
            e >>= 1
        return result

    def e2_sqrt(self, a: int) -> Ext2Elem:
        """Canonical square root in F_{q^2} of the base element a."""
        r = self.sqrt_canonical(a)
        if r is not None:
            return Ext2Elem(r, 0)
        hi = self.sqrt_canonical(self.div(a, self.delta))
        return Ext2Elem(0, hi)


def mk_field(p: int, n: int = 1) -> FieldCtx:
    """Construct F_{p^n} with the canonical modulus."""
    return FieldCtx(p, n)


def ext2_solve_unit(ctx: FieldCtx, r: int) -> Ext2Elem:
    """The unit u in F_{q^2} with u + 1/u = r, canonical branch.

    The two solutions are u and 1/u; the one with canonically smaller
    representation is returned.  Everything downstream is required to be
    invariant under u -> 1/u, so the branch is a tie-break only.
    """
    d = ctx.sub(ctx.mul(r, r), ctx.from_int(4))
    half = ctx.inv(ctx.from_int(2))
    s = ctx.sqrt_canonical(d)
    if s is not None:
        u1 = ctx.mul(ctx.add(r, s), half)
        u2 = ctx.mul(ctx.sub(r, s), half)
        u = u1 if ctx.elem_key(u1) <= ctx.elem_key(u2) else u2
        return Ext2Elem(u, 0)
    y = ctx.sqrt_canonical(ctx.div(d, ctx.delta))
    hi = ctx.mul(y, half)
    hin = ctx.neg(hi)
    hi = hi if ctx.elem_key(hi) <= ctx.elem_key(hin) else hin
    return Ext2Elem(ctx.mul(r, half), hi)


def unit_order_test(ctx: FieldCtx, u: Ext2Elem, e: int, target: int) -> bool:
    """True iff u^e equals target, with target in {+1, -1}."""
    want = Ext2Elem(ctx.one if target == 1 else ctx.minus_one, 0)
    return ctx.e2_pow(u, e) == want
