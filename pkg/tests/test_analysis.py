import pytest
import sympy
from hypothesis import given, strategies as st

from logcodes import polynomial as P
from logcodes.analysis import (NonzeroDistribution, gap_report, newton_polynomial,
                               newton_real_rooted, nonzero)
from logcodes.families import wd_basic, wd_hamming_binary, wd_mds
from logcodes.linear_code import WeightDistribution

seq = NonzeroDistribution.from_counts


def test_nonzero_even_4():
    nz = nonzero(wd_basic("even", n=4))
    assert nz.weights == (0, 2, 4) and nz.counts == (1, 6, 1)


def test_nonzero_zero_code():
    nz = nonzero(WeightDistribution(2, 3, 0, (1, 0, 0, 0)))
    assert nz.weights == (0,) and nz.counts == (1,)


def test_nonzero_h4():
    assert nonzero(wd_hamming_binary(4)).counts == (1, 35, 105, 168, 280, 435, 435, 280, 168,
                                                    105, 35, 1)


def test_gap_h4():
    rep = gap_report(nonzero(wd_hamming_binary(4)))
    assert rep.gap_count == 2 and not rep.log_concave
    assert rep.violations == (3, 8)
    assert [w.defect for w in rep.witnesses] == [-1176, -1176]


def test_gap_golay23():
    rep = gap_report(nonzero(wd_basic("golay23")))
    assert rep.gap_count == 2
    assert rep.witnesses[0].defect == 506 ** 2 - 253 * 1288 == -69828


def test_log_concave_1771():
    rep = gap_report(seq((1, 7, 7, 1)))
    assert rep.gap_count == 0 and rep.log_concave and rep.unimodal


def test_mds_5_3_5_gap_at_last_internal_index():
    rep = gap_report(nonzero(wd_mds(5, 3, 5)))
    assert rep.violations == (2,)


def test_ties_are_not_gaps():
    assert gap_report(seq((1, 2, 4))).gap_count == 0


def test_unimodality_plateaus_and_valleys():
    assert gap_report(seq((1, 3, 3, 2))).unimodal
    assert not gap_report(seq((3, 1, 3))).unimodal
    assert gap_report(seq((5,))).unimodal
    assert gap_report(seq((1, 5, 2, 5))).peak_index == 1


@given(st.lists(st.integers(1, 10 ** 6), min_size=1, max_size=30))
def test_gap_report_definition(xs):
    rep = gap_report(seq(xs))
    brute = [i for i in range(1, len(xs) - 1) if xs[i] ** 2 < xs[i - 1] * xs[i + 1]]
    assert list(rep.violations) == brute
    assert rep.log_concave == (rep.gap_count == 0)
    assert rep.peak_index == xs.index(max(xs))


@given(st.lists(st.integers(1, 50), min_size=1, max_size=12))
def test_log_concave_positive_implies_unimodal(xs):
    rep = gap_report(seq(xs))
    if rep.log_concave:
        assert rep.unimodal


# --- Newton / Sturm ---------------------------------------------------------

def test_newton_1_6_1():
    nz = seq((1, 6, 1))
    assert newton_polynomial(nz) == [1, 12, 1]
    assert newton_real_rooted(nz).all_real


def test_newton_singleton():
    r = newton_real_rooted(seq((1,)))
    assert r.degree == 0 and r.all_real


def test_newton_1771():
    r = newton_real_rooted(seq((1, 7, 7, 1)))
    assert r.all_real <= gap_report(seq((1, 7, 7, 1))).log_concave


def _sympy_real_roots(coeffs):
    x = sympy.symbols("x")
    return len(sympy.Poly(list(reversed(coeffs)), x).real_roots())  # with multiplicity


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9).filter(lambda c: c[-1] != 0))
def test_real_root_count_matches_sympy(coeffs):
    total = sum(i * P.count_real_roots(f) for i, f in P.squarefree_decomposition(coeffs))
    assert total == _sympy_real_roots(coeffs)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3),
       st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_repeated_roots(roots, mult):
    f = [1]
    for r, k in zip(roots, mult):
        for _ in range(k):
            f = [a - r * b for a, b in zip([0] + f, f + [0])]
    deg = len(f) - 1
    total = sum(i * P.count_real_roots(g) for i, g in P.squarefree_decomposition(f))
    assert total == deg


@given(st.lists(st.integers(1, 10 ** 4), min_size=1, max_size=10))
def test_newton_implication(xs):
    nz = seq(xs)
    r = newton_real_rooted(nz)
    assert 0 <= r.sturm_real_root_count <= r.degree
    if r.all_real:
        assert gap_report(nz).log_concave
    assert r.all_real == (_sympy_real_roots(newton_polynomial(nz)) == r.degree)


def test_polynomial_division_exactness():
    from logcodes.errors import InexactDivision
    with pytest.raises(InexactDivision):
        P.exact_quotient([1, 0, 1], [1, 1])
    assert P.exact_quotient([-1, 0, 1], [1, 1]) == [-1, 1]


@given(st.integers(1, 2 ** 400), st.integers(1, 2 ** 400), st.integers(1, 2 ** 400))
def test_square_below_matches_products(l, m, r):
    from logcodes.analysis import square_below
    assert square_below(l, m, r) == (m * m < l * r)


@given(st.integers(2 ** 100, 2 ** 300), st.integers(-3, 3))
def test_square_below_near_ties(x, d):
    from logcodes.analysis import square_below
    # x^2 vs (x - 1)(x + 1) + d sits inside the overlap window of the leading bits
    assert square_below(x - 1, x, x + 1 + d) == (x * x < (x - 1) * (x + 1 + d))
    assert square_below(x, x, x) is False
