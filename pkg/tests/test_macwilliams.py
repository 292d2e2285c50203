import pytest
from hypothesis import given, strategies as st

from logcodes.errors import InexactTransform
from logcodes.families import (wd_basic, wd_ext_hamming_binary, wd_hamming_binary, wd_hamming_q,
                               wd_hrm2, wd_mds, wd_prm2, wd_rm2)
from logcodes.linear_code import WeightDistribution, brute_weight_distribution, dual_code
from logcodes.macwilliams import krawtchouk_column, macwilliams

from oracles import macwilliams_by_substitution
from test_linear_code import codes


def test_simplex_3():
    assert macwilliams(wd_basic("simplex", m=3)).counts == (1, 0, 0, 7, 7, 0, 0, 1)


@pytest.mark.parametrize("n", [1, 4, 9])
def test_full_space_to_zero_code(n):
    out = macwilliams(wd_basic("full_space", n=n))
    assert out.counts == (1,) + (0,) * n and out.k == 0


def test_involution_hamming_5_2():
    wd = wd_hamming_q(2, 5)
    assert macwilliams(macwilliams(wd)) == wd


FAMILY_WDS = ([wd_hamming_binary(m) for m in range(2, 7)]
              + [wd_ext_hamming_binary(m) for m in range(2, 7)]
              + [wd_rm2(m) for m in range(2, 7)]
              + [wd_hamming_q(m, q) for m, q in ((2, 3), (2, 4), (2, 7), (3, 3), (2, 16))]
              + [wd_hrm2(q, m) for q, m in ((2, 3), (3, 2), (4, 3))]
              + [wd_prm2(q, m) for q, m in ((2, 2), (3, 2), (5, 2))]
              + [wd_mds(n, k, q) for n, k, q in ((5, 3, 5), (10, 4, 9), (17, 9, 16))]
              + [wd_basic("golay23"), wd_basic("golay24"), wd_basic("even", n=12)])


@pytest.mark.parametrize("wd", FAMILY_WDS, ids=lambda w: f"q{w.q}n{w.n}k{w.k}")
def test_involution_and_substitution_oracle(wd):
    assert wd.n <= 64
    out = macwilliams(wd)
    assert out.counts[0] == 1 and sum(out.counts) == wd.q ** (wd.n - wd.k)
    assert out.counts == macwilliams_by_substitution(wd.counts, wd.q, wd.k)
    assert macwilliams(out) == wd


@given(codes(qs=(2, 3, 4), max_n=12, max_k=8))
def test_matches_brute_force_of_dual(code):
    assert macwilliams(brute_weight_distribution(code)) == brute_weight_distribution(dual_code(code))


def test_rejects_non_code_distribution():
    # sums to 2^2, yet the weight-1 term of the transform is 6/4
    with pytest.raises(InexactTransform):
        macwilliams(WeightDistribution(2, 3, 2, (1, 3, 0, 0)))


@pytest.mark.parametrize("n,q", [(5, 2), (7, 3), (6, 4), (9, 5)])
def test_krawtchouk_columns_match_expansion(n, q):
    for i in range(n + 1):
        e = [0] * (n + 1)
        e[i] = 1
        assert krawtchouk_column(n, q, i) == [int(x) for x in macwilliams_by_substitution(e, q, 0)]


@pytest.mark.parametrize("wd", FAMILY_WDS, ids=lambda w: f"q{w.q}n{w.n}k{w.k}")
def test_routes_agree(wd):
    assert macwilliams(wd, method="shift") == macwilliams(wd, method="krawtchouk")


@given(codes(qs=(2, 3, 4, 5), max_n=12, max_k=6))
def test_routes_agree_random(code):
    wd = brute_weight_distribution(code)
    assert macwilliams(wd, method="shift") == macwilliams(wd, method="krawtchouk")


def test_shift_route_rejects_non_code_distribution():
    with pytest.raises(InexactTransform):
        macwilliams(WeightDistribution(2, 3, 2, (1, 3, 0, 0)), method="shift")
    with pytest.raises(ValueError):
        macwilliams(wd_basic("simplex", m=3), method="fft")


@pytest.mark.parametrize("m", [8, 11])
def test_dense_double_transform(m):
    wd = wd_basic("simplex", m=m)
    assert macwilliams(macwilliams(wd)) == wd


@given(st.lists(st.integers(-10 ** 40, 10 ** 40), min_size=1, max_size=140))
def test_taylor_shift_matches_sympy(p):
    import sympy
    from logcodes.macwilliams import taylor_shift_1
    x = sympy.symbols("x")
    def strip(c):
        c = [int(v) for v in c]
        while c and c[-1] == 0:
            c.pop()
        return c
    want = strip(sympy.Poly(list(reversed(p)), x).shift(1).all_coeffs()[::-1])
    assert strip(taylor_shift_1(p)) == want
