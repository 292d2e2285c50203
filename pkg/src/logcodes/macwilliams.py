"""Exact MacWilliams transform of weight distributions.

Two routes compute the same numbers.  ``krawtchouk`` sums one Krawtchouk
column per nonzero input count, cheap when the input is sparse (simplex,
first-order Reed-Muller).  ``shift`` rewrites
    sum_i A_i (1-y)^i (1+(q-1)y)^(n-i)
as two Taylor shifts of an integer polynomial, so its cost does not depend
on how many counts are nonzero.
"""

from __future__ import annotations

from functools import lru_cache

from ._bigint import binomial_row, divexact, exact_div, exact_div_all, mpz
from .errors import InexactDivision, InexactTransform
from .linear_code import WeightDistribution


def krawtchouk_column(n: int, q: int, i: int, binom: list | None = None) -> list:
    """K_0(i), ..., K_n(i): coefficients of (1 + (q-1)t)^(n-i) (1 - t)^i.

    The end columns come straight from binomials; the rest use
    (j+1) K_{j+1} = ((q-1)(n-i) - i - (q-2) j) K_j - (q-1)(n-j+1) K_{j-1}.
    """
    c = q - 1
    if i == 0 or i == n:
        binom = binom if binom is not None else binomial_row(n)
        if i == 0:
            if c == 1:
                return list(binom)
            out, pw = [], mpz(1)
            for b in binom:
                out.append(b * pw)
                pw *= c
            return out
        return [b if j % 2 == 0 else -b for j, b in enumerate(binom)]
    if c == 1 and abs(n - 2 * i) <= 64:
        return _binary_column(n, i)
    a0 = c * (n - i) - i
    out = [mpz(1)]
    prev, cur = mpz(0), mpz(1)
    for j in range(n):
        nxt = divexact((a0 - (c - 1) * j) * cur - c * (n - j + 1) * prev, j + 1)
        out.append(nxt)
        prev, cur = cur, nxt
    return out


def _binary_column(n: int, i: int) -> list:
    """(1+t)^(n-i) (1-t)^i = (1-t^2)^a (1 +- t)^b: spread one binomial row, then b passes."""
    a, b = min(i, n - i), abs(n - 2 * i)
    sign = 1 if n - i > i else -1
    zero = mpz(0)
    out = [zero] * (n + 1)
    for j, x in enumerate(binomial_row(a)):
        out[2 * j] = x if j % 2 == 0 else -x
    top = 2 * a
    for _ in range(b):
        # multiply by (1 + sign t) in place, highest coefficient first
        top += 1
        if sign == 1:
            for j in range(top, 0, -1):
                out[j] += out[j - 1]
        else:
            for j in range(top, 0, -1):
                out[j] -= out[j - 1]
    return out


# --- polynomial helpers for the shift route -----------------------------------

def _pack(coeffs, width: int) -> int:
    return int.from_bytes(b"".join(int(c).to_bytes(width, "little") for c in coeffs), "little")


def _unpack(value, width: int, count: int) -> list:
    raw = int(value).to_bytes(width * count, "little")
    return [mpz(int.from_bytes(raw[i * width:(i + 1) * width], "little")) for i in range(count)]


def _mul_nonneg(a: list, b: list) -> list:
    """Product of polynomials with nonnegative coefficients by Kronecker substitution."""
    bits = (max(x.bit_length() for x in a) + max(x.bit_length() for x in b)
            + min(len(a), len(b)).bit_length() + 1)
    width = (bits + 7) // 8
    prod = mpz(_pack(a, width)) * mpz(_pack(b, width))
    return _unpack(prod, width, len(a) + len(b) - 1)


def _mul(a: list, b_nonneg: list) -> list:
    pos = [x if x > 0 else mpz(0) for x in a]
    neg = [-x if x < 0 else mpz(0) for x in a]
    out = _mul_nonneg(pos, b_nonneg) if any(pos) else [mpz(0)] * (len(a) + len(b_nonneg) - 1)
    if any(neg):
        out = [x - y for x, y in zip(out, _mul_nonneg(neg, b_nonneg))]
    return out


@lru_cache(maxsize=64)
def _binomials(h: int) -> tuple:
    return tuple(binomial_row(h))


def taylor_shift_1(p: list) -> list:
    """Coefficients of p(x + 1), constant term first."""
    n = len(p)
    if n <= 48:
        p = list(p)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                p[j] += p[j + 1]
        return p
    h = n // 2
    lo, hi = taylor_shift_1(p[:h]), taylor_shift_1(p[h:])
    # p(x+1) = lo(x+1) + (x+1)^h hi(x+1)
    out = _mul(hi, list(_binomials(h)))
    for i, c in enumerate(lo):
        out[i] += c
    return out[:n]


def _macwilliams_shift(counts, n: int, q: int) -> list:
    """q^k B_j, via R(u) = sum_i A_i c^(n-i) u^(n-i) (q-u)^i with u = 1 + c y, c = q - 1.

    Writing (q-u)/u = q/u - 1 turns R into a shift by -1 of D(t) = sum_i A_i c^(n-i) t^i;
    substituting u = 1 + c y is a shift by +1.  The result carries c^(n-j) on B_j.
    """
    c = q - 1
    cp = [mpz(1)]
    for _ in range(n):
        cp.append(cp[-1] * c)
    # D(x - 1) = (-1)^deg-free trick: negate odd coefficients, shift by +1, negate back
    d = [mpz(a) * cp[n - i] * (-1 if i % 2 else 1) for i, a in enumerate(counts)]
    d1 = [x if j % 2 == 0 else -x for j, x in enumerate(taylor_shift_1(d))]
    qp = mpz(1)
    r = [mpz(0)] * (n + 1)  # r[l] = coefficient of u^l
    for j, x in enumerate(d1):
        r[n - j] = x * qp
        qp *= q
    r1 = taylor_shift_1(r)
    if c == 1:
        return r1
    return [exact_div(x, cp[n - j], "Taylor-shift normalisation") for j, x in enumerate(r1)]


def macwilliams(wd: WeightDistribution, method: str = "auto") -> WeightDistribution:
    """Distribution of the dual code: B_j = q^-k sum_i A_i K_j(i).

    ``method`` picks ``"krawtchouk"`` or ``"shift"``; ``"auto"`` takes the
    Krawtchouk columns when at most 16 counts are nonzero.
    """
    n, q, k = wd.n, wd.q, wd.k
    if method not in ("auto", "krawtchouk", "shift"):
        raise ValueError(f"unknown method {method!r}")
    nnz = sum(1 for a in wd.counts if a)
    if method == "shift" or (method == "auto" and nnz > 16):
        return _finish(_macwilliams_shift(wd.counts, n, q), q, n, k)
    acc = None
    binom = binomial_row(n) if wd.counts[0] or wd.counts[n] else None
    for i, a in enumerate(wd.counts):
        if not a:
            continue
        col = krawtchouk_column(n, q, i, binom)
        if acc is None:
            acc = col if a == 1 else [a * y for y in col]
        elif a == 1:
            acc = [x + y for x, y in zip(acc, col)]
        else:
            acc = [x + a * y for x, y in zip(acc, col)]
    return _finish(acc, q, n, k)


def _finish(acc, q: int, n: int, k: int) -> WeightDistribution:
    size = q ** k
    try:
        out = exact_div_all(acc, size)
    except InexactDivision as exc:
        raise InexactTransform(f"not a linear-code distribution: {exc}") from None
    return WeightDistribution(q, n, n - k, tuple(out))
