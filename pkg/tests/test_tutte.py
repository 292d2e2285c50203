import pytest
from hypothesis import given, settings

from logcodes.errors import BudgetExceeded, InexactDivision
from logcodes.families import gen_family
from logcodes.field import field_make
from logcodes.linear_code import LinearCode, brute_weight_distribution, code_make, make_code
from logcodes.tutte import (BivariatePolynomial, characteristic_from_tutte,
                            characteristic_polynomial, rank_table, tutte_polynomial,
                            wd_from_tutte, wd_via_tutte)
from logcodes.verify import huh_gaps, random_loopless_code, tutte_codes

from oracles import naive_rank
from test_linear_code import codes


def test_uniform_matroid_u23():
    # repetition [3,1]: column matroid U_{1,3}, T = x + y + y^2
    T = tutte_polynomial(make_code(2, [[1, 1, 1]]))
    assert T.coeffs == {(1, 0): 1, (0, 1): 1, (0, 2): 1}


def test_mds_4_2_5_bases():
    T = tutte_polynomial(code_make(gen_family("rs_mds", n=4, k=2, q=5)))
    assert T(1, 1) == 6  # every pair of columns is a basis


def test_rank_zero_code():
    code = LinearCode.zero(field_make(3), 4)
    T = tutte_polynomial(code)
    assert T.coeffs == {(0, 4): 1}
    assert wd_from_tutte(T, 4, 0, 3).counts == (1, 0, 0, 0, 0)


def test_single_column_chi():
    assert characteristic_polynomial(make_code(2, [[1]])).coeffs == (-1, 1)


def test_loop_makes_chi_vanish():
    code = make_code(2, [[1, 0]])
    assert characteristic_polynomial(code).coeffs == ()


def test_rank_table_matches_naive():
    code = code_make(gen_family("hamming2", m=3))
    F = code.field
    G = code.gen.entries.tolist()
    table = rank_table(code)
    want = {}
    for mask in range(1 << code.n):
        cols = [j for j in range(code.n) if mask >> j & 1]
        r = naive_rank(F, [[row[j] for j in cols] for row in G]) if cols else 0
        want[r, len(cols)] = want.get((r, len(cols)), 0) + 1
    got = {(r, s): c for r, row in enumerate(table) for s, c in enumerate(row) if c}
    assert got == want


@pytest.mark.parametrize("name,code", tutte_codes(), ids=[n for n, _ in tutte_codes()])
def test_tutte_suite(name, code):
    T = tutte_polynomial(code)
    assert wd_from_tutte(T, code.n, code.rank, code.q) == brute_weight_distribution(code)
    chi = characteristic_polynomial(code)
    assert chi == characteristic_from_tutte(T, code.rank)
    assert huh_gaps(chi) == 0
    assert T(2, 2) == 2 ** code.n


@settings(max_examples=40)
@given(codes(qs=(2, 3, 4), max_n=9, max_k=5))
def test_tutte_round_trip_random(code):
    assert wd_via_tutte(code) == brute_weight_distribution(code)
    T = tutte_polynomial(code)
    assert characteristic_polynomial(code) == characteristic_from_tutte(T, code.rank)
    assert T(2, 2) == 2 ** code.n


@settings(max_examples=20)
@given(codes(qs=(2, 3), max_n=8, max_k=4))
def test_backends_agree(code):
    assert tutte_polynomial(code, backend="numba") == tutte_polynomial(code, backend="numpy")


def test_budget():
    code = code_make(gen_family("hamming2", m=4))
    with pytest.raises(BudgetExceeded):
        tutte_polynomial(code, budget=1 << 10)


def test_wd_from_tutte_rejects_foreign_terms():
    with pytest.raises(InexactDivision):
        wd_from_tutte(BivariatePolynomial({(3, 0): 1}), 3, 2, 2)


def test_random_loopless_is_reproducible():
    a = random_loopless_code(10, 4, seed=10)
    b = random_loopless_code(10, 4, seed=10)
    assert a.same_space(b) and a.rank == 4
    assert (a.gen.entries.sum(axis=0) > 0).all()
