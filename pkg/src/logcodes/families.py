"""Closed-form weight distributions and explicit generators for the code families.

Every closed form here has a matching constructor in ``gen_family`` so the
brute-force enumerator can confirm it independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Mapping

import numpy as np

from ._bigint import binomial_row, exact_div, exact_div_all, mpz, product
from .errors import BadParams
from .field import field_make, is_prime_power
from .linear_code import (GeneratorMatrix, LinearCode, WeightDistribution, code_make,
                          dual_code)

FAMILIES = ("full_space", "even", "simplex", "rm1", "golay23", "golay24", "hamming2",
            "ext_hamming2", "hamming_q", "rm2", "hrm2", "prm2", "mds")

GOLAY23 = {0: 1, 7: 253, 8: 506, 11: 1288, 12: 1288, 15: 506, 16: 253, 23: 1}
GOLAY24 = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
# 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11, constant term first
GOLAY_POLY = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def _check_q(q: int) -> None:
    _need(isinstance(q, int) and is_prime_power(q), f"q = {q} must be a prime power")


def _check_m(m: int, lo: int = 2) -> None:
    _need(isinstance(m, int) and m >= lo, f"m = {m} must be an integer >= {lo}")


def _from_dict(q: int, n: int, k: int, table: Mapping[int, int]) -> WeightDistribution:
    counts = [0] * (n + 1)
    for w, c in table.items():
        counts[w] += c
    return WeightDistribution(q, n, k, tuple(counts))


def _gauss(q: int, lo: int, hi: int):
    """prod_{i=lo}^{hi} (q^i - 1)."""
    return product(mpz(q) ** i - 1 for i in range(lo, hi + 1))


def _even_gauss(q: int, j: int):
    """prod_{i=1}^{j} (q^{2i} - 1)."""
    return product(mpz(q) ** (2 * i) - 1 for i in range(1, j + 1))


# --- basic families --------------------------------------------------------

def wd_full_space(n: int, q: int = 2) -> WeightDistribution:
    _need(n >= 1, f"n = {n} must be >= 1")
    _check_q(q)
    row = binomial_row(n)
    return WeightDistribution(q, n, n, tuple(c * (q - 1) ** i for i, c in enumerate(row)))


def wd_even(n: int) -> WeightDistribution:
    _need(n >= 2, f"n = {n} must be >= 2")
    row = binomial_row(n)
    return WeightDistribution(2, n, n - 1, tuple(c if i % 2 == 0 else 0
                                                  for i, c in enumerate(row)))


def wd_simplex(m: int, q: int = 2) -> WeightDistribution:
    _check_m(m)
    _check_q(q)
    n = (q ** m - 1) // (q - 1)
    return _from_dict(q, n, m, {0: 1, q ** (m - 1): q ** m - 1})


def wd_rm1(m: int) -> WeightDistribution:
    _check_m(m, 1)
    n = 1 << m
    return _from_dict(2, n, m + 1, {0: 1, n // 2: 2 * n - 2, n: 1})


def wd_basic(family: str, **params) -> WeightDistribution:
    """full_space(n, q), even(n), simplex(m, q), rm1(m), golay23, golay24."""
    if family == "full_space":
        return wd_full_space(params["n"], params.get("q", 2))
    if family == "even":
        return wd_even(params["n"])
    if family == "simplex":
        return wd_simplex(params["m"], params.get("q", 2))
    if family == "rm1":
        return wd_rm1(params["m"])
    if family == "golay23":
        return _from_dict(2, 23, 12, GOLAY23)
    if family == "golay24":
        return _from_dict(2, 24, 12, GOLAY24)
    raise BadParams(f"unknown basic family {family!r}")


# --- Hamming codes ---------------------------------------------------------

def wd_hamming_binary(m: int) -> WeightDistribution:
    """Binary Hamming [2^m - 1, 2^m - 1 - m] code."""
    _check_m(m)
    n = (1 << m) - 1
    row = binomial_row(n)
    half = binomial_row((n - 1) // 2)
    num = [mpz(0)] * (n + 1)
    for i, h in enumerate(half):
        t = n * h if i % 2 == 0 else -n * h
        num[2 * i] = row[2 * i] + t
        num[2 * i + 1] = row[2 * i + 1] - t
    return WeightDistribution(2, n, n - m, tuple(exact_div_all(num, n + 1, "A_w")))


def wd_ext_hamming_binary(m: int) -> WeightDistribution:
    """Extended binary Hamming [2^m, 2^m - 1 - m] code."""
    _check_m(m)
    n = 1 << m
    row = binomial_row(n)
    half = binomial_row(n // 2)
    num = [mpz(0)] * (n + 1)
    for i, h in enumerate(half):
        t = (n - 1) * h
        num[2 * i] = row[2 * i] + (t if i % 2 == 0 else -t)
    return WeightDistribution(2, n, n - 1 - m, tuple(exact_div_all(num, n, "A_2i")))


def wd_hamming_q(m: int, q: int) -> WeightDistribution:
    """q-ary Hamming [(q^m-1)/(q-1), n - m] code."""
    _check_m(m)
    _check_q(q)
    n = (q ** m - 1) // (q - 1)
    a, b = n - q ** (m - 1), q ** (m - 1)
    # coefficients of (1 + (q-1) t)^a and (1 - t)^b
    left = [c * mpz(q - 1) ** i for i, c in enumerate(binomial_row(a))]
    right = [c if j % 2 == 0 else -c for j, c in enumerate(binomial_row(b))]
    full = binomial_row(n)
    qm = q ** m
    counts = []
    for w in range(n + 1):
        s = sum(left[i] * right[w - i] for i in range(max(0, w - b), min(w, a) + 1))
        counts.append(exact_div(mpz(q - 1) ** w * full[w] + (qm - 1) * s, qm, f"A_{w}"))
    return WeightDistribution(q, n, n - m, tuple(counts))


# --- second order Reed-Muller families -------------------------------------

def wd_rm2(m: int) -> WeightDistribution:
    """Binary second order Reed-Muller code R(2, m), length 2^m."""
    _check_m(m)
    n = 1 << m
    k = 1 + m + comb(m, 2)
    mid = mpz(2) ** m - 1
    for l in range(1, (m - 1) // 2 + 1):
        mid += exact_div(mpz(2) ** (l * l + l) * _gauss(2, m - 2 * l, m), _even_gauss(2, l))
    table = {0: 1, n: 1, n // 2: 2 * mid}
    for j in range(1, m // 2 + 1):
        c = exact_div(mpz(2) ** (j * j + j) * _gauss(2, m - 2 * j + 1, m), _even_gauss(2, j))
        for sign in (1, -1):
            table[n // 2 + sign * (1 << (m - j - 1))] = c
    return _from_dict(2, n, k, table)


def wd_hrm2(q: int, m: int) -> WeightDistribution:
    """Homogeneous second order Reed-Muller code HRM_q(2, m), length q^m.

    Side weights are q^m - q^{m-1} - tau q^{m-j-1}(q-1); without the (q-1)
    factor they do not match enumeration for q > 2.
    """
    _check_q(q)
    _check_m(m)
    qq = mpz(q)
    mid = qq ** m - 1
    for l in range(1, (m - 1) // 2 + 1):
        mid += exact_div(qq ** (l * l + l) * _gauss(q, m - 2 * l, m), _even_gauss(q, l))
    base = q ** m - q ** (m - 1)
    table = {0: mpz(1), base: mid}
    for j in range(1, m // 2 + 1):
        for tau in (1, -1):
            c = exact_div(qq ** (j * j) * (qq ** j + tau) * _gauss(q, m - 2 * j + 1, m),
                          2 * _even_gauss(q, j), "HRM count")
            w = base - tau * q ** (m - j - 1) * (q - 1)
            table[w] = table.get(w, 0) + c
    return _from_dict(q, q ** m, comb(m + 1, 2), table)


def wd_prm2(q: int, m: int) -> WeightDistribution:
    """Projective second order Reed-Muller code PRM_q(2, m), length (q^{m+1}-1)/(q-1).

    The products over (q^i - 1) run up to i = m + 1: with the upper limit m the
    counts sum to less than q^{C(m+2,2)} and disagree with enumeration.
    """
    _check_q(q)
    _check_m(m)
    qq = mpz(q)
    n = (q ** (m + 1) - 1) // (q - 1)
    mid = qq ** (m + 1) - 1
    for l in range(1, m // 2 + 1):
        mid += exact_div(qq ** (l * l + l) * _gauss(q, m - 2 * l + 1, m + 1), _even_gauss(q, l))
    table = {0: mpz(1), q ** m: mid}
    for j in range(1, (m + 1) // 2 + 1):
        for tau in (1, -1):
            c = exact_div(qq ** (j * j) * (qq ** j + tau) * _gauss(q, m - 2 * j + 2, m + 1),
                          2 * _even_gauss(q, j), "PRM count")
            w = q ** m - tau * q ** (m - j)
            table[w] = table.get(w, 0) + c
    return _from_dict(q, n, comb(m + 2, 2), table)


# --- MDS -------------------------------------------------------------------

def wd_mds(n: int, k: int, q: int) -> WeightDistribution:
    """The unique weight distribution an [n, k, n-k+1]_q MDS code would have."""
    _need(1 <= k <= n, f"need 1 <= k <= n, got n = {n}, k = {k}")
    _need(q >= 2, f"q = {q} must be >= 2")
    d = n - k + 1
    row = binomial_row(n)
    counts = [mpz(1)] + [mpz(0)] * n
    qq = mpz(q)
    for w in range(d, n + 1):
        c = binomial_row(w - 1, w - d)
        s = sum((c[j] if j % 2 == 0 else -c[j]) * qq ** (w - d - j) for j in range(w - d + 1))
        counts[w] = row[w] * (q - 1) * s
        if counts[w] < 0:
            raise BadParams(f"A_{w} = {counts[w]} < 0: no [{n},{k}]_{q} MDS code exists")
    return WeightDistribution(q, n, k, tuple(counts))


# --- generator matrices ----------------------------------------------------

def projective_points(q: int, m: int) -> list[tuple[int, ...]]:
    """Normalized representatives (first nonzero coordinate 1), sorted lexicographically."""
    pts = []
    for lead in range(m):
        for tail in itertools.product(range(q), repeat=m - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    return sorted(pts)


def _mk(q: int, rows) -> GeneratorMatrix:
    return GeneratorMatrix(field_make(q), np.array(rows, dtype=np.int64))


def _gen_simplex(m: int, q: int) -> GeneratorMatrix:
    pts = projective_points(q, m)
    return _mk(q, [[p[i] for p in pts] for i in range(m)])


def _gen_hamming_q(m: int, q: int) -> GeneratorMatrix:
    return dual_code(code_make(_gen_simplex(m, q))).gen


def _gen_ext_hamming2(m: int) -> GeneratorMatrix:
    H = _gen_hamming_q(m, 2).entries
    par = H.sum(axis=1) % 2
    return _mk(2, np.column_stack([H, par]))


def _gen_rm(r: int, m: int) -> GeneratorMatrix:
    pts = list(itertools.product((0, 1), repeat=m))
    rows = []
    for deg in range(r + 1):
        for mono in itertools.combinations(range(m), deg):
            rows.append([int(all(p[i] for i in mono)) for p in pts])
    return _mk(2, rows)


def _quadratic_rows(q: int, pts) -> list[list[int]]:
    F = field_make(q)
    m = len(pts[0])
    return [[F.mul(p[i], p[j]) for p in pts]
            for i in range(m) for j in range(i, m)]


def _gen_hrm2(q: int, m: int) -> GeneratorMatrix:
    return _mk(q, _quadratic_rows(q, list(itertools.product(range(q), repeat=m))))


def _gen_prm2(q: int, m: int) -> GeneratorMatrix:
    return _mk(q, _quadratic_rows(q, projective_points(q, m + 1)))


def _gen_rs_mds(n: int, k: int, q: int) -> GeneratorMatrix:
    """(Extended) Reed-Solomon code; for even q also the [q+2, 3] hyperoval code and its dual."""
    if n == q + 2 and q % 2 == 0 and k in (3, q - 1):
        F = field_make(q)
        rows = [[F.pow(a, i) for a in range(q)] for i in range(3)]
        for r, tail in zip(rows, ((0, 0), (0, 1), (1, 0))):
            r.extend(tail)
        G = _mk(q, rows)
        return G if k == 3 else dual_code(code_make(G)).gen
    _need(1 <= k <= n <= q + 1, f"need k <= n <= q + 1, got n = {n}, k = {k}, q = {q}")
    F = field_make(q)
    cols = min(n, q)
    rows = [[F.pow(a, i) for a in range(cols)] for i in range(k)]
    if n == q + 1:
        for i, r in enumerate(rows):
            r.append(1 if i == k - 1 else 0)
    return _mk(q, rows)


def _gen_golay23() -> GeneratorMatrix:
    rows = []
    for s in range(12):
        r = [0] * 23
        r[s:s + 12] = GOLAY_POLY
        rows.append(r)
    return _mk(2, rows)


def _gen_golay24() -> GeneratorMatrix:
    G = _gen_golay23().entries
    return _mk(2, np.column_stack([G, G.sum(axis=1) % 2]))


def gen_family(family: str, **params) -> GeneratorMatrix:
    """Explicit generator matrix for a family member."""
    p = params
    try:
        if family == "simplex":
            _check_m(p["m"]); _check_q(p.get("q", 2))
            return _gen_simplex(p["m"], p.get("q", 2))
        if family in ("hamming_q", "hamming2"):
            q = p.get("q", 2) if family == "hamming_q" else 2
            _check_m(p["m"]); _check_q(q)
            return _gen_hamming_q(p["m"], q)
        if family == "ext_hamming2":
            _check_m(p["m"])
            return _gen_ext_hamming2(p["m"])
        if family in ("rm", "rm1", "rm2"):
            r = {"rm1": 1, "rm2": 2}.get(family, p.get("r"))
            _check_m(p["m"], 1)
            _need(r is not None and 0 <= r <= p["m"], f"need 0 <= r <= m, got r = {r}")
            return _gen_rm(r, p["m"])
        if family in ("hrm2", "prm2"):
            _check_q(p["q"]); _check_m(p["m"])
            return (_gen_hrm2 if family == "hrm2" else _gen_prm2)(p["q"], p["m"])
        if family in ("rs_mds", "mds"):
            _check_q(p["q"])
            return _gen_rs_mds(p["n"], p["k"], p["q"])
        if family == "golay23":
            return _gen_golay23()
        if family == "golay24":
            return _gen_golay24()
        if family == "full_space":
            q, n = p.get("q", 2), p["n"]
            _check_q(q); _need(n >= 1, f"n = {n} must be >= 1")
            return _mk(q, np.eye(n, dtype=np.int64))
        if family == "even":
            n = p["n"]
            _need(n >= 2, f"n = {n} must be >= 2")
            G = np.zeros((n - 1, n), dtype=np.int64)
            G[:, :-1] = np.eye(n - 1, dtype=np.int64)
            G[:, -1] = 1
            return _mk(2, G)
    except KeyError as exc:
        raise BadParams(f"{family}: missing parameter {exc.args[0]}") from None
    raise BadParams(f"no generator for family {family!r}")


# --- uniform front end -----------------------------------------------------

_WD = {
    "full_space": (wd_full_space, ("n",), ("q",)),
    "even": (wd_even, ("n",), ()),
    "simplex": (wd_simplex, ("m",), ("q",)),
    "rm1": (wd_rm1, ("m",), ()),
    "golay23": (lambda: wd_basic("golay23"), (), ()),
    "golay24": (lambda: wd_basic("golay24"), (), ()),
    "hamming2": (wd_hamming_binary, ("m",), ()),
    "ext_hamming2": (wd_ext_hamming_binary, ("m",), ()),
    "hamming_q": (wd_hamming_q, ("m", "q"), ()),
    "rm2": (wd_rm2, ("m",), ()),
    "hrm2": (wd_hrm2, ("q", "m"), ()),
    "prm2": (wd_prm2, ("q", "m"), ()),
    "mds": (wd_mds, ("n", "k", "q"), ()),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in _WD:
            raise BadParams(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        fn, req, opt = _WD[self.family]
        missing = [r for r in req if r not in self.params]
        if missing:
            raise BadParams(f"{self.family}: missing parameter {missing[0]}")
        extra = set(self.params) - set(req) - set(opt)
        if extra:
            raise BadParams(f"{self.family}: unexpected parameter {sorted(extra)[0]}")
        object.__setattr__(self, "params", dict(self.params))

    def __hash__(self):
        return hash((self.family, tuple(sorted(self.params.items()))))

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({args})"

    def weight_distribution(self) -> WeightDistribution:
        fn, req, opt = _WD[self.family]
        return fn(**self.params)

    def generator(self) -> GeneratorMatrix:
        return gen_family(self.family, **self.params)

    def code(self) -> LinearCode:
        return code_make(self.generator())


def family_wd(family: str, **params) -> WeightDistribution:
    return FamilySpec(family, params).weight_distribution()
