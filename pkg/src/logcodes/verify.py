"""Theorem-verification sweeps shared by ``logcodes verify`` and the test suite.

Each suite yields rows (subject, expected, observed, passed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .analysis import gap_report, mds_q0, mds_verdict, newton_real_rooted, nonzero
from .families import (FamilySpec, gen_family, wd_ext_hamming_binary, wd_hamming_binary,
                       wd_hamming_q, wd_hrm2, wd_prm2, wd_rm2)
from .linear_code import LinearCode, brute_weight_distribution, code_make, make_code
from .tutte import (characteristic_from_tutte, characteristic_polynomial, tutte_polynomial,
                    wd_from_tutte)


@dataclass(frozen=True)
class Row:
    suite: str
    subject: str
    expected: str
    observed: str
    passed: bool


def _gap_row(suite: str, subject: str, wd, want: Callable[[int], bool], expected: str) -> Row:
    g = gap_report(nonzero(wd)).gap_count
    return Row(suite, subject, expected, str(g), want(g))


def suite_hamming(ms: Iterable[int] = range(3, 15)) -> Iterator[Row]:
    for m in ms:
        exp = 2 if m == 4 else 0
        yield _gap_row("hamming", f"H_{m}", wd_hamming_binary(m), lambda g, e=exp: g == e, str(exp))


def suite_ext_hamming(ms: Iterable[int] = range(3, 15)) -> Iterator[Row]:
    for m in ms:
        yield _gap_row("ext_hamming", f"ext H_{m}", wd_ext_hamming_binary(m),
                       lambda g: g == 0, "0")


def suite_rm2(ms: Iterable[int] = range(2, 15)) -> Iterator[Row]:
    for m in ms:
        yield _gap_row("rm2", f"R(2,{m})", wd_rm2(m), lambda g: g == 0, "0")


def suite_hrm_prm(qs: Iterable[int] = (2, 3, 4, 5), ms: Iterable[int] = range(2, 8)) -> Iterator[Row]:
    ms = list(ms)
    for q in qs:
        for m in ms:
            strict = m % 2 == 1
            yield _gap_row("hrm_prm", f"HRM_{q}(2,{m})", wd_hrm2(q, m),
                           (lambda g: g == 0) if strict else (lambda g: g <= 1),
                           "0" if strict else "<=1")
            strict = m % 2 == 0
            yield _gap_row("hrm_prm", f"PRM_{q}(2,{m})", wd_prm2(q, m),
                           (lambda g: g == 0) if strict else (lambda g: g <= 1),
                           "0" if strict else "<=1")


HAMMING_Q_BAD = (3, 4, 5, 7, 8)
HAMMING_Q_GOOD = (9, 11, 13, 16, 25, 27, 32)


def suite_hamming_q(bad: Iterable[int] = HAMMING_Q_BAD,
                    good: Iterable[int] = HAMMING_Q_GOOD) -> Iterator[Row]:
    """H_(2,q) is the [q+1, q-1] MDS code: closed form and MDS verdict must agree."""
    for q, want in [(q, False) for q in bad] + [(q, True) for q in good]:
        lc = gap_report(nonzero(wd_hamming_q(2, q))).log_concave
        v = mds_verdict(q + 1, q - 1, q, mode="direct")
        obs = f"{'log_concave' if lc else 'not_log_concave'}/{v.status}"
        exp = "log_concave" if want else "not_log_concave"
        yield Row("hamming_q", f"H_(2,{q})", exp, obs, lc == want and v.status == exp)


MDS_DIRECT_GRID = (
    [((5, 3, q), False) for q in (4, 5)]
    + [((5, 3, q), True) for q in (7, 8, 9, 11, 13)]
    + [((12, 9, q), True) for q in (16, 17, 19)]
    + [((11, 9, q), True) for q in (16, 17, 19)]
    + [((6, 4, 5), False)]
)


def suite_mds() -> Iterator[Row]:
    for (n, k), coeffs, interval in (((5, 3), (6, -44, 66), (5, 6)),
                                     ((12, 9), (13, -209, 418), (13, 14))):
        th = mds_q0(n, k)
        obs = f"{th.coeffs} root in {th.root_intervals[1]}"
        yield Row("mds", f"q0({n},{k})", f"{coeffs} root in {interval}", obs,
                  th.coeffs == coeffs and th.scale == 1 and th.root_intervals[1] == interval)
    for (n, k, q), want in MDS_DIRECT_GRID:
        v = mds_verdict(n, k, q, mode="direct")
        exp = "log_concave" if want else "not_log_concave"
        yield Row("mds", f"MDS[{n},{k}]_{q}", exp, v.status, v.status == exp)


def random_loopless_code(n: int, k: int, seed: int) -> LinearCode:
    """Random binary [n, k] code without zero columns (a loop would make chi vanish)."""
    rng = np.random.default_rng(seed)
    while True:
        G = rng.integers(0, 2, (k, n))
        if (G.sum(axis=0) == 0).any():
            continue
        try:
            return make_code(2, G.tolist())
        except ValueError:
            continue


def tutte_codes() -> list[tuple[str, LinearCode]]:
    return [
        ("even[4,3]", code_make(gen_family("even", n=4))),
        ("rep[3,1]", make_code(2, [[1, 1, 1]])),
        ("H_3", code_make(gen_family("hamming2", m=3))),
        ("RS[5,3]_5", code_make(gen_family("rs_mds", n=5, k=3, q=5))),
        ("R(1,3)", code_make(gen_family("rm1", m=3))),
        ("random[10,4]", random_loopless_code(10, 4, seed=10)),
        ("random[12,5]", random_loopless_code(12, 5, seed=12)),
    ]


def huh_gaps(chi) -> int:
    """Gap count of |coefficients| of chi, highest degree first."""
    from .analysis import NonzeroDistribution
    mags = [abs(c) for c in reversed(chi.coeffs)]
    return gap_report(NonzeroDistribution.from_counts(mags)).gap_count


def suite_tutte(codes=None) -> Iterator[Row]:
    for name, code in (codes or tutte_codes()):
        T = tutte_polynomial(code)
        via = wd_from_tutte(T, code.n, code.rank, code.q)
        brute = brute_weight_distribution(code)
        chi = characteristic_polynomial(code)
        same_chi = chi == characteristic_from_tutte(T, code.rank)
        gaps = huh_gaps(chi)
        ok = via == brute and same_chi and gaps == 0
        obs = (f"{'=' if via == brute else '!='}brute chi:{'agree' if same_chi else 'differ'} "
               f"|chi| gaps {gaps}")
        yield Row("tutte", name, "=brute chi:agree |chi| gaps 0", obs, ok)


SUITES = {
    "hamming": suite_hamming,
    "ext_hamming": suite_ext_hamming,
    "rm2": suite_rm2,
    "hrm_prm": suite_hrm_prm,
    "mds": suite_mds,
    "hamming_q": suite_hamming_q,
    "tutte": suite_tutte,
}


def newton_implication(wds, sturm_limit: int = 64) -> tuple[int, list[str]]:
    """Check all_real => log-concave; returns (Sturm runs, counterexample subjects).

    The implication is vacuous for gap-free sequences, so beyond
    ``sturm_limit`` terms only gapped sequences get the Sturm computation.
    """
    runs, bad = 0, []
    for name, wd in wds:
        nz = nonzero(wd)
        gaps = gap_report(nz).gap_count
        if gaps or len(nz) <= sturm_limit:
            runs += 1
            if newton_real_rooted(nz).all_real and gaps:
                bad.append(name)
    return runs, bad


def family_check(spec: FamilySpec):
    """(closed form, brute force) for one family member."""
    return spec.weight_distribution(), brute_weight_distribution(spec.code())
