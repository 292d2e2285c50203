"""MDS weight-ratio functions, the q0 threshold quadratic and log-concavity verdicts.

Notation: d = n - k + 1, s = w - d, and
    f(s, w, q) = sum_{j=0}^{s} (-1)^j C(w-1, j) q^-j
so that A_w = C(n, w) (q-1) q^s f(s, w, q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .errors import BadParams, ZeroDenominator


def mds_f(s: int, w: int, q: int) -> Fraction:
    if s < 0 or w < 1 or q < 2:
        raise BadParams(f"need s >= 0, w >= 1, q >= 2; got s={s}, w={w}, q={q}")
    num = sum((-1) ** j * comb(w - 1, j) * q ** (s - j) for j in range(s + 1))
    return Fraction(num, q ** s)


def mds_g(s: int, w: int, q: int) -> Fraction:
    """f(s,w)^2 / (f(s-1,w-1) f(s+1,w+1))."""
    if s < 1:
        raise BadParams(f"g needs s >= 1, got {s}")
    lo, hi = mds_f(s - 1, w - 1, q), mds_f(s + 1, w + 1, q)
    if lo == 0 or hi == 0:
        raise ZeroDenominator(f"g({s},{w},{q}): vanishing f in the denominator")
    return mds_f(s, w, q) ** 2 / (lo * hi)


def mds_count(n: int, k: int, q: int, w: int) -> int:
    """A_w from the MDS weight formula; may be negative when no such code exists."""
    d = n - k + 1
    if w == 0:
        return 1
    if w < d or w > n:
        return 0
    s = w - d
    return comb(n, w) * (q - 1) * sum((-1) ** j * comb(w - 1, j) * q ** (s - j)
                                      for j in range(s + 1))


def mds_counts(n: int, k: int, q: int) -> tuple[int, ...]:
    return tuple(mds_count(n, k, q, w) for w in range(n + 1))


def mds_ratio_G(s: int, n: int, k: int, q: int) -> Fraction:
    """A_w^2 / (A_{w-1} A_{w+1}) for w = n - k + 1 + s, via the factorization
    ((w+1)/w) ((n-w+1)/(n-w)) g(s, w, q)."""
    d = n - k + 1
    w = d + s
    if not (d < w < n):
        raise BadParams(f"need d < w < n; got d={d}, w={w}, n={n}")
    if mds_count(n, k, q, w - 1) == 0 or mds_count(n, k, q, w + 1) == 0:
        raise ZeroDenominator(f"A_{w - 1} or A_{w + 1} vanishes for ({n},{k},{q})")
    return Fraction(w + 1, w) * Fraction(n - w + 1, n - w) * mds_g(s, w, q)


# --- threshold quadratic ---------------------------------------------------

@dataclass(frozen=True)
class ThresholdResult:
    n: int
    k: int
    m: int
    coeffs: tuple[int, int, int]   # (c2, c1, c0)
    scale: int                     # coeffs = scale * quadratic
    discriminant: int
    root_intervals: tuple          # ((lo, hi), (lo, hi)) smaller root first; lo == hi if exact
    q_min_integer: int | None
    note: str = ""

    def value(self, q: int) -> int:
        c2, c1, c0 = self.coeffs
        return c2 * q * q + c1 * q + c0


def _quadratic(n: int, k: int) -> tuple[tuple[int, int, int], int]:
    m = n - k + 2
    two_c0 = k * m ** 3 - k * m * m - 2 * (k * m - m - k + 1)
    c2, c1 = m + k - 1, -(k * m * m - 2 * k + 2)
    if two_c0 % 2:
        return (2 * c2, 2 * c1, two_c0), 2
    return (c2, c1, two_c0 // 2), 1


def mds_q0(n: int, k: int) -> ThresholdResult:
    """Exact data on (m+k-1) q^2 - (km^2-2k+2) q + (km^3-km^2)/2 - km + m + k - 1, m = n-k+2."""
    if not 3 <= k <= n:
        raise BadParams(f"need 3 <= k <= n, got n={n}, k={k}")
    (c2, c1, c0), scale = _quadratic(n, k)
    disc = c1 * c1 - 4 * c2 * c0
    val = lambda x: c2 * x * x + c1 * x + c0
    base = dict(n=n, k=k, m=n - k + 2, coeffs=(c2, c1, c0), scale=scale, discriminant=disc)
    if disc < 0:
        return ThresholdResult(**base, root_intervals=(), q_min_integer=2, note="complex roots")
    r = isqrt(disc)
    # roots (-c1 -+ sqrt(disc)) / (2 c2); start near them and fix up by exact sign tests
    hi = (-c1 + r) // (2 * c2)
    while val(hi) < 0:
        hi += 1
    while val(hi - 1) >= 0 and 2 * c2 * (hi - 1) + c1 > 0:
        hi -= 1
    lo = (-c1 - r) // (2 * c2) + 1
    while val(lo) < 0:
        lo -= 1
    while val(lo + 1) >= 0 and 2 * c2 * (lo + 1) + c1 < 0:
        lo += 1
    # hi: least integer right of the vertex with val >= 0; lo: greatest left of it
    big = (hi, hi) if val(hi) == 0 else (hi - 1, hi)
    small = (lo, lo) if val(lo) == 0 else (lo, lo + 1)
    note = "double root" if disc == 0 else ""
    return ThresholdResult(**base, root_intervals=(small, big), q_min_integer=max(hi, 2), note=note)


# --- verdicts ---------------------------------------------------------------

@dataclass(frozen=True)
class MdsVerdict:
    n: int
    k: int
    q: int
    status: str       # "log_concave" | "not_log_concave"
    method: str       # "theorem" | "direct"
    notes: tuple[str, ...] = ()
    direct_status: str | None = None
    gap_count: int | None = None
    violations: tuple[int, ...] = field(default=())


def theorem_applies(n: int, k: int) -> bool:
    return 3 <= k and 2 * k <= n + 6


def mds_direct(n: int, k: int, q: int):
    """Gap report of the nonzero MDS formula counts (may include negative values)."""
    from .analysis import GapReport, Witness, _is_unimodal
    a = [c for c in mds_counts(n, k, q) if c]
    viol = [i for i in range(1, len(a) - 1) if a[i] * a[i] < a[i - 1] * a[i + 1]]
    wits = tuple(Witness(i, a[i - 1], a[i], a[i + 1]) for i in viol)
    top = max(a)
    return GapReport(tuple(viol), len(viol), not viol, _is_unimodal(a),
                     a.index(top), wits), any(c < 0 for c in a)


def mds_verdict(n: int, k: int, q: int, mode: str = "auto") -> MdsVerdict:
    """Log-concavity verdict for an [n, k, n-k+1]_q MDS code.

    ``mode="auto"`` uses the threshold theorem when 3 <= k <= n/2 + 3 and the
    direct gap count otherwise; ``"direct"`` and ``"theorem"`` force one route.
    """
    if not (1 <= k <= n and q >= 2):
        raise BadParams(f"need 1 <= k <= n and q >= 2; got n={n}, k={k}, q={q}")
    if mode not in ("auto", "direct", "theorem"):
        raise BadParams(f"unknown mode {mode!r}")
    rep, negative = mds_direct(n, k, q)
    direct = "log_concave" if rep.log_concave and not negative else "not_log_concave"
    notes = []
    if n > q + 1:
        notes.append(f"n = {n} > q + 1 = {q + 1}: MDS codes with these parameters are not "
                     "expected to exist; the formula is evaluated regardless")
    if negative:
        notes.append("the formula gives a negative count, so no such code exists")
    if n == q + 1 and k == q - 1:
        notes.append(f"[{n},{k},3]_{q} is the q-ary Hamming code H_(2,{q})")
    use_theorem = mode == "theorem" or (mode == "auto" and theorem_applies(n, k))
    if use_theorem:
        if not theorem_applies(n, k):
            raise BadParams(f"threshold theorem needs 3 <= k <= n/2 + 3; got n={n}, k={k}")
        th = mds_q0(n, k)
        status = "log_concave" if q >= th.q_min_integer else "not_log_concave"
        if th.root_intervals:
            notes.append(f"q0({n},{k}) lies in {th.root_intervals[1]}; the smaller root lies in "
                         f"{th.root_intervals[0]}")
        if status != direct:
            notes.append(f"direct gap count disagrees: {direct}")
        return MdsVerdict(n, k, q, status, "theorem", tuple(notes), direct,
                          rep.gap_count, rep.violations)
    return MdsVerdict(n, k, q, direct, "direct", tuple(notes), direct,
                      rep.gap_count, rep.violations)
