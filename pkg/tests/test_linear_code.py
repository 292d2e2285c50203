import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from logcodes.errors import BadParams, BudgetExceeded, RankDeficient
from logcodes.families import gen_family
from logcodes.field import field_make
from logcodes.linear_code import (GeneratorMatrix, LinearCode, WeightDistribution, brute_weight_distribution,
                                  code_make, dual_code, format_matrix, make_code, parse_matrix, rref)

from oracles import naive_rank, naive_weight_distribution


@st.composite
def codes(draw, qs=(2, 3, 4), max_n=10, max_k=6):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(n, max_k)))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
                         min_size=k, max_size=k))
    F = field_make(q)
    assume(naive_rank(F, rows) == k)
    return make_code(q, rows, n)


def test_identity_code():
    c = make_code(2, np.eye(3, dtype=int).tolist())
    assert c.rank == 3 and c.pivot_columns == (0, 1, 2)


def test_rank_deficient():
    with pytest.raises(RankDeficient) as exc:
        make_code(2, [[1, 1, 0], [1, 1, 0]])
    assert exc.value.actual_rank == 1


def test_visibly_independent():
    assert make_code(2, [[1, 1, 0, 0], [0, 1, 1, 0]]).rank == 2


def test_generator_validation():
    F = field_make(3)
    with pytest.raises(BadParams):
        GeneratorMatrix(F, np.array([[0, 3]]))
    with pytest.raises(BadParams):
        GeneratorMatrix(F, np.ones((3, 2), dtype=int))


def test_h3_distribution():
    wd = brute_weight_distribution(code_make(gen_family("hamming2", m=3)))
    assert wd.counts == (1, 0, 0, 7, 7, 0, 0, 1)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_repetition(n):
    wd = brute_weight_distribution(make_code(2, [[1] * n]))
    assert wd.counts == (1,) + (0,) * (n - 1) + (1,)


def test_vandermonde_5_3():
    wd = brute_weight_distribution(code_make(gen_family("rs_mds", n=5, k=3, q=5)))
    assert wd.counts == (1, 0, 0, 40, 40, 44)


def test_budget():
    code = code_make(gen_family("hamming2", m=4))
    with pytest.raises(BudgetExceeded) as exc:
        brute_weight_distribution(code, budget=1000)
    assert exc.value.required == 2 ** 11


def test_simplex_dual_is_hamming():
    s3 = code_make(gen_family("simplex", m=3))
    d = dual_code(s3)
    assert d.rank == 4
    assert brute_weight_distribution(d).counts == (1, 0, 0, 7, 7, 0, 0, 1)


def test_dual_of_full_space_is_zero_code():
    full = make_code(2, np.eye(5, dtype=int).tolist())
    z = dual_code(full)
    assert z.rank == 0 and z.n == 5
    assert brute_weight_distribution(z).counts == (1, 0, 0, 0, 0, 0)
    assert dual_code(z).rank == 5


def test_weight_distribution_invariants():
    with pytest.raises(ValueError):
        WeightDistribution(2, 3, 1, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        WeightDistribution(2, 2, 1, (2, 0, 0))
    with pytest.raises(ValueError):
        WeightDistribution(2, 2, 1, (1, 2, -1))


def _dot(F, u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(int(a), int(b)))
    return acc


@given(codes())
def test_dual_orthogonal_and_dimension(code):
    d = dual_code(code)
    F = code.field
    assert code.rank + d.rank == code.n
    for r in code.gen.entries:
        for s in d.gen.entries:
            assert _dot(F, r, s) == 0


@given(codes())
def test_dual_involution(code):
    assert dual_code(dual_code(code)).same_space(code)


@given(codes(max_n=9, max_k=5))
def test_brute_matches_naive_enumeration(code):
    expected = naive_weight_distribution(code.field, code.gen.entries.tolist(), code.n)
    for backend in ("numba", "numpy"):
        assert brute_weight_distribution(code, backend=backend).counts == expected


@given(codes(qs=(2, 3, 4, 5, 8, 9), max_n=12, max_k=5), st.integers(1, 7))
def test_partitioning_does_not_change_counts(code, workers):
    base = brute_weight_distribution(code, workers=1)
    assert brute_weight_distribution(code, workers=workers) == base
    assert sum(base.counts) == code.q ** code.rank


@given(codes())
def test_rref_is_reduced(code):
    rows, piv = rref(code.field, code.gen.entries.tolist(), code.n)
    assert list(piv) == sorted(piv)
    for i, c in enumerate(piv):
        assert [r[c] for r in rows] == [int(i == j) for j in range(len(rows))]


def test_matrix_format_round_trip():
    G = gen_family("hamming_q", m=2, q=4)
    text = "# comment\n" + format_matrix(G)
    assert parse_matrix(text) == G


@pytest.mark.parametrize("text", ["", "2 3\n", "2 3 1\n1 0\n", "2 3 2\n1 0 1\n", "2 2 1\n1 x\n",
                                  "6 2 1\n1 0\n", "2 2 1\n1 2\n"])
def test_matrix_parse_errors(text):
    with pytest.raises(ValueError):
        parse_matrix(text)


def test_zero_code_constructor():
    z = LinearCode.zero(field_make(3), 4)
    assert z.rank == 0 and brute_weight_distribution(z).counts == (1, 0, 0, 0, 0)
