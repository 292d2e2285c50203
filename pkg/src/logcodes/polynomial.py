"""Dense integer polynomials (coefficient lists, constant term first).

Only what the real-root count needs: primitive pseudo-remainder sequences,
exact division, Yun's squarefree decomposition and Sturm sign variations.
"""

from __future__ import annotations

from math import gcd

from ._bigint import mpz
from .errors import InexactDivision


def trim(a: list) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a) -> int:
    return len(trim(a)) - 1


def derivative(a: list) -> list:
    return trim([i * c for i, c in enumerate(a)][1:])


def sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return trim([x - y for x, y in zip(a, b)])


def content(a: list) -> int:
    g = 0
    for c in a:
        g = gcd(g, int(c))
        if g == 1:
            break
    return g


def primitive(a: list) -> list:
    """Divide out the content and make the leading coefficient positive."""
    a = trim(a)
    if not a:
        return a
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a] if g != 1 else a


def pseudo_rem(a: list, b: list) -> list:
    """Remainder of |lc(b)|^(deg a - deg b + 1) * a by b; the positive scale keeps signs."""
    a, b = trim(a), trim(b)
    db = len(b) - 1
    if len(a) - 1 < db:
        return a
    lc = b[-1]
    r = [c * abs(lc) ** (len(a) - db) for c in a]
    while len(r) - 1 >= db and r:
        c = r[-1]
        f = c // lc
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] -= f * bi
        r = trim(r)
    return r


def exact_quotient(a: list, b: list) -> list:
    """a / b for integer polynomials where b divides a over the integers."""
    a, b = trim(a), trim(b)
    db = len(b) - 1
    if len(a) - 1 < db:
        if a:
            raise InexactDivision("polynomial division left a remainder")
        return []
    qt = [0] * (len(a) - db)
    r = list(a)
    for shift in range(len(a) - 1 - db, -1, -1):
        c = r[shift + db]
        if c % b[-1]:
            raise InexactDivision("polynomial division left a remainder")
        f = c // b[-1]
        qt[shift] = f
        if f:
            for i, bi in enumerate(b):
                r[shift + i] -= f * bi
    if any(r):
        raise InexactDivision("polynomial division left a remainder")
    return trim(qt)


def poly_gcd(a: list, b: list) -> list:
    """Primitive gcd (positive leading coefficient) via a primitive remainder sequence."""
    a, b = primitive(a), primitive(b)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        a, b = b, primitive(pseudo_rem(a, b))
    return a


def squarefree_decomposition(f: list) -> list[tuple[int, list]]:
    """Yun's algorithm: [(i, f_i)] with f = c * prod f_i^i, each f_i squarefree, deg f_i >= 1."""
    f = primitive([mpz(c) for c in f])
    out = []
    df = derivative(f)
    a = poly_gcd(f, df)
    b = exact_quotient(f, a)
    c = exact_quotient(df, a)
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        ai = poly_gcd(b, d) if d else b
        if degree(ai) > 0:
            out.append((i, ai))
        b = exact_quotient(b, ai)
        c = exact_quotient(d, ai)
        d = sub(c, derivative(b))
        i += 1
    return out


def sturm_sequence(f: list) -> list[list]:
    seq = [trim(f), derivative(f)]
    while degree(seq[-1]) > 0:
        r = pseudo_rem(seq[-2], seq[-1])
        if not r:
            break
        g = content(r)
        seq.append([-(c // g) for c in r])
    return seq


def _variations(signs) -> int:
    s = [x for x in signs if x]
    return sum(1 for u, v in zip(s, s[1:]) if u != v)


def count_real_roots(f: list) -> int:
    """Number of distinct real roots of f (Sturm's theorem on the whole line)."""
    f = trim(f)
    if degree(f) <= 0:
        return 0
    seq = sturm_sequence(f)
    sgn = lambda c: (c > 0) - (c < 0)
    plus = [sgn(p[-1]) for p in seq]
    minus = [sgn(p[-1]) * (-1) ** (len(p) - 1) for p in seq]
    return _variations(minus) - _variations(plus)
