"""Sequence analysis: nonzero extraction, gap counting, unimodality and the
real-rootedness test built on Sturm sequences."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import polynomial as P
from ._bigint import binomial_row
from .linear_code import WeightDistribution


@dataclass(frozen=True)
class NonzeroDistribution:
    weights: tuple[int, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.counts):
            raise ValueError("weights and counts differ in length")
        if any(b <= a for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError("weights must be strictly increasing")
        if any(c <= 0 for c in self.counts):
            raise ValueError("nonzero distribution holds a non-positive count")

    def __len__(self) -> int:
        return len(self.counts)

    @classmethod
    def from_counts(cls, counts) -> "NonzeroDistribution":
        """Treat a bare positive sequence as counts at weights 0, 1, 2, ..."""
        counts = tuple(counts)
        return cls(tuple(range(len(counts))), counts)


@dataclass(frozen=True)
class Witness:
    index: int
    left: int
    mid: int
    right: int

    @property
    def defect(self) -> int:
        return self.mid * self.mid - self.left * self.right


@dataclass(frozen=True)
class GapReport:
    violations: tuple[int, ...]
    gap_count: int
    log_concave: bool
    unimodal: bool
    peak_index: int
    witnesses: tuple[Witness, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class RealRootCheck:
    degree: int
    sturm_real_root_count: int
    all_real: bool


def nonzero(wd: WeightDistribution) -> NonzeroDistribution:
    pairs = [(i, c) for i, c in enumerate(wd.counts) if c]
    return NonzeroDistribution(tuple(i for i, _ in pairs), tuple(c for _, c in pairs))


_TOP = 96


def _head(x):
    """(t, e) with t * 2^e <= x < (t + 1) * 2^e and t < 2^96."""
    e = max(x.bit_length() - _TOP, 0)
    return x >> e, e


def square_below(left, mid, right) -> bool:
    """Exactly decide mid^2 < left * right.

    The leading 96 bits of each factor bound both sides by intervals; only
    when those overlap are the full products formed.
    """
    (lt, le), (mt, me), (rt, re) = _head(left), _head(mid), _head(right)
    base = min(2 * me, le + re)
    sq_lo, sq_hi = mt * mt << (2 * me - base), (mt + 1) ** 2 << (2 * me - base)
    pr_lo, pr_hi = lt * rt << (le + re - base), (lt + 1) * (rt + 1) << (le + re - base)
    if sq_hi <= pr_lo:
        return True
    if sq_lo >= pr_hi:
        return False
    return mid * mid < left * right


def _is_unimodal(a) -> bool:
    i, n = 0, len(a)
    while i + 1 < n and a[i] <= a[i + 1]:
        i += 1
    while i + 1 < n and a[i] >= a[i + 1]:
        i += 1
    return i >= n - 1


def gap_report(nzd: NonzeroDistribution | WeightDistribution) -> GapReport:
    """Exact log-concavity report.  A tie a_i^2 == a_{i-1} a_{i+1} is not a gap."""
    if isinstance(nzd, WeightDistribution):
        nzd = nonzero(nzd)
    a = nzd.counts
    viol, wits = [], []
    for i in range(1, len(a) - 1):
        if square_below(a[i - 1], a[i], a[i + 1]):
            viol.append(i)
            wits.append(Witness(i, a[i - 1], a[i], a[i + 1]))
    top = max(a)
    peak = next(i for i, c in enumerate(a) if c == top)
    return GapReport(tuple(viol), len(viol), not viol, _is_unimodal(a), peak, tuple(wits))


def newton_polynomial(nzd: NonzeroDistribution) -> list[int]:
    """sum_i C(t, i) a_i x^i with t = len - 1, constant term first."""
    t = len(nzd.counts) - 1
    return [b * a for b, a in zip(binomial_row(t), nzd.counts)]


def newton_real_rooted(nzd: NonzeroDistribution | WeightDistribution) -> RealRootCheck:
    """Decide whether the Newton polynomial of the counts has only real zeros.

    Real roots are counted with multiplicity: each squarefree factor f_i of
    the decomposition prod f_i^i contributes i times its distinct real roots.
    """
    if isinstance(nzd, WeightDistribution):
        nzd = nonzero(nzd)
    poly = newton_polynomial(nzd)
    deg = P.degree(poly)
    if deg <= 0:
        return RealRootCheck(max(deg, 0), 0, True)
    total = sum(i * P.count_real_roots(f) for i, f in P.squarefree_decomposition(poly))
    return RealRootCheck(deg, total, total == deg)


from .mds import (MdsVerdict, ThresholdResult, mds_f, mds_g, mds_q0,  # noqa: E402
                  mds_ratio_G, mds_verdict)
