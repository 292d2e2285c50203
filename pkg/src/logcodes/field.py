"""Finite fields GF(q), q = p**e, with elements encoded as integers.

An element's base-p digits are the coefficients of its polynomial
representative, constant term in the least significant digit.  The modulus
is the lexicographically smallest monic irreducible polynomial of degree e
(coefficients compared constant term first), so the encoding is fully
determined by q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import DivisionByZero, NotPrimePower, TooLarge

DEFAULT_MAX_Q = 1 << 16


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q == p**e, or None if q is not a prime power."""
    if q < 2:
        return None
    f = _factor(q)
    if len(f) != 1:
        return None
    ((p, e),) = f.items()
    return p, e


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


# --- polynomials over GF(p) as coefficient lists, constant term first ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    e = len(coeffs) - 1
    if e == 1:
        return True
    if coeffs[0] == 0:
        return False
    # trial division by every monic polynomial of degree 1..e//2
    for deg in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(list(coeffs), list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over GF(p)."""
    if e == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=e):
        cand = tuple(low) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...] = field(compare=True)

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # -- encoding helpers --

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        v = 0
        for d in reversed(list(ds)):
            v = v * self.p + int(d)
        return v

    def _slow_mul(self, a: int, b: int) -> int:
        p = self.p
        if self.e == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_digits(_poly_mod(prod, list(self.modulus), p))

    @cached_property
    def generator(self) -> int:
        """Smallest primitive element (by encoded value)."""
        q = self.q
        if q == 2:
            return 1
        primes = list(_factor(q - 1))
        for g in range(2, q):
            if all(self._slow_pow(g, (q - 1) // r) != 1 for r in primes):
                return g
        raise AssertionError("multiplicative group is not cyclic")

    def _slow_pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            k >>= 1
        return result

    @cached_property
    def tables(self) -> dict[str, np.ndarray]:
        """exp/log/neg/inv lookup arrays (int64)."""
        q, p = self.q, self.p
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        g, x = self.generator, 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        exp[q - 1:] = exp[: q - 1]
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = exp[(q - 1 - log[a]) % (q - 1)]
        neg = np.zeros(q, dtype=np.int64)
        if p == 2:
            neg[:] = np.arange(q)
        else:
            for a in range(q):
                neg[a] = self.from_digits((-d) % p for d in self.digits(a))
        for arr in (exp, log, inv, neg):
            arr.setflags(write=False)
        return {"exp": exp, "log": log, "inv": inv, "neg": neg}

    @cached_property
    def _lists(self):
        t = self.tables
        return t["exp"].tolist(), t["log"].tolist(), t["inv"].tolist(), t["neg"].tolist()

    # -- arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        p, out, scale = self.p, 0, 1
        for _ in range(self.e):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        return self._lists[3][a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log, _, _ = self._lists
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.q})")
        return self._lists[2][a]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero(f"division by 0 in GF({self.q})")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("0 to a negative power")
            return 1 if k == 0 else 0
        exp, log, _, _ = self._lists
        return exp[(log[a] * k) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def field_make(q: int, max_q: int = DEFAULT_MAX_Q) -> FieldSpec:
    """Build GF(q).  Raises NotPrimePower or TooLarge."""
    if q < 2:
        raise NotPrimePower(f"q must be >= 2, got {q}")
    if q > max_q:
        raise TooLarge(f"q = {q} exceeds the table bound {max_q}")
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, e = pe
    return FieldSpec(p, e, smallest_irreducible(p, e))


def field_arith(spec: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of add/sub/mul/div/inv/pow by name."""
    for x in (a,) if op in ("inv", "pow") else (a, b):
        if not 0 <= x < spec.q:
            raise ValueError(f"{x} is not an element of GF({spec.q})")
    if op == "inv":
        return spec.inv(a)
    if op == "pow":
        return spec.pow(a, b)
    return getattr(spec, op)(a, b)
