"""Big-integer helpers.

Long-code distributions hold ~10^4-digit numbers, so gmpy2's ``mpz`` is used
when it imports: counts stay ``mpz`` (an exact integer type that compares and
hashes like ``int``) because converting back to ``int`` costs more than the
arithmetic itself.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InexactDivision

try:
    import gmpy2

    mpz = gmpy2.mpz
    divexact = gmpy2.divexact
    INT_TYPES: tuple[type, ...] = (int, type(gmpy2.mpz(0)))

    def _low_zero_bits(x) -> int:
        return gmpy2.bit_scan1(x) if x else 1 << 62
except ImportError:  # pragma: no cover
    gmpy2 = None
    mpz = int
    INT_TYPES = (int,)

    def divexact(a, b):
        return a // b

    def _low_zero_bits(x) -> int:
        return (x & -x).bit_length() - 1 if x else 1 << 62


def is_int(x) -> bool:
    return isinstance(x, INT_TYPES) and not isinstance(x, bool)


def exact_div(a, b, what: str = "division"):
    """a / b, raising InexactDivision unless b divides a."""
    b = int(b)
    if b > 0 and b & (b - 1) == 0:
        s = b.bit_length() - 1
        if _low_zero_bits(a) < s:
            raise InexactDivision(f"{what}: {a} is not divisible by {b}")
        return a >> s
    qt, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{what}: {a} is not divisible by {b}")
    return qt


def exact_div_all(values, b, what: str = "division") -> list:
    """[v / b for v in values], raising InexactDivision on the first remainder."""
    b = int(b)
    if b > 0 and b & (b - 1) == 0:
        s = b.bit_length() - 1
        mask = b - 1
        for v in values:
            if v & mask:
                raise InexactDivision(f"{what}: {v} is not divisible by {b}")
        return [v >> s for v in values]
    out = []
    for v in values:
        qt, r = divmod(v, b)
        if r:
            raise InexactDivision(f"{what}: {v} is not divisible by {b}")
        out.append(qt)
    return out


def binomial_row(n: int, upto: int | None = None):
    """[C(n, 0), ..., C(n, upto)]; the upper half mirrors the lower half.

    Full rows for n >= 4096 come from a two-entry cache (a closed form and a
    transform of the same length ask for the same rows) and are tuples; treat
    every returned row as read-only.
    """
    if upto is None or upto >= n:
        return _big_row(n) if n >= 4096 else _row(n, n)
    return _row(n, upto)


def _row(n: int, upto: int) -> list:
    half = min(upto, n // 2)
    row = [mpz(1)]
    c = mpz(1)
    for j in range(half):
        c = divexact(c * (n - j), j + 1)
        row.append(c)
    for j in range(half + 1, upto + 1):
        row.append(row[n - j])
    return row


@lru_cache(maxsize=2)
def _big_row(n: int) -> tuple:
    return tuple(_row(n, n))


def product(values):
    out = mpz(1)
    for v in values:
        out *= v
    return out
