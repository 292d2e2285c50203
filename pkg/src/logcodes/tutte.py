"""Tutte and characteristic polynomials of a code's column matroid.

Both come from one table: counts[r][s], the number of column subsets of size
s and rank r, produced by the subset-rank kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, InexactDivision
from .linear_code import LinearCode, WeightDistribution

DEFAULT_TUTTE_BUDGET = 1 << 20


@dataclass(frozen=True)
class BivariatePolynomial:
    """Sparse integer polynomial: {(i, j): c} means c x^i y^j; no zero entries."""

    coeffs: dict

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {e: int(c) for e, c in self.coeffs.items() if c})

    def __call__(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def __eq__(self, other):
        return isinstance(other, BivariatePolynomial) and self.coeffs == other.coeffs

    def degree_x(self) -> int:
        return max((i for i, _ in self.coeffs), default=0)

    def degree_y(self) -> int:
        return max((j for _, j in self.coeffs), default=0)


@dataclass(frozen=True)
class UnivariatePolynomial:
    """Integer polynomial, constant term first, trailing zeros stripped."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_pow(base: list, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = _poly_mul(out, base)
    return out


def rank_table(code: LinearCode, budget: int = DEFAULT_TUTTE_BUDGET, *,
               backend: str | None = None) -> list[list[int]]:
    need = 1 << code.n
    if need > budget:
        raise BudgetExceeded(need, budget, "column subsets")
    return _kernels.subset_rank_counts(code.gen.entries, code.field, backend=backend).tolist()


def tutte_polynomial(code: LinearCode, budget: int = DEFAULT_TUTTE_BUDGET, *,
                     backend: str | None = None) -> BivariatePolynomial:
    """T(x, y) = sum_A (x-1)^(r - rk A) (y-1)^(|A| - rk A), over all column subsets A."""
    table = rank_table(code, budget, backend=backend)
    r = code.rank
    coeffs: dict = {}
    for rk, row in enumerate(table):
        for size, cnt in enumerate(row):
            if not cnt:
                continue
            a, b = r - rk, size - rk
            # expand (x-1)^a (y-1)^b
            for i in range(a + 1):
                ci = comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    key = (i, j)
                    coeffs[key] = coeffs.get(key, 0) + cnt * ci * comb(b, j) * (-1) ** (b - j)
    return BivariatePolynomial(coeffs)


def wd_from_tutte(T: BivariatePolynomial, n: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution from W(x, y) = y^(n-k) (x-y)^k T((x+(q-1)y)/(x-y), x/y).

    With x = 1 each term t_ij x^i y^j of T becomes
    t_ij (1+(q-1)y)^i (1-y)^(k-i) y^(n-k-j); a negative exponent means the
    expression does not clear its denominators.
    """
    out = [0] * (n + 1)
    for (i, j), t in T.coeffs.items():
        if i > k or j > n - k:
            raise InexactDivision(f"Tutte term x^{i} y^{j} exceeds rank {k} / nullity {n - k}")
        poly = _poly_mul(_poly_pow([1, q - 1], i), _poly_pow([1, -1], k - i))
        shift = n - k - j
        for w, c in enumerate(poly):
            out[w + shift] += t * c
    return WeightDistribution(q, n, k, tuple(out))


def wd_via_tutte(code: LinearCode, budget: int = DEFAULT_TUTTE_BUDGET, *,
                 backend: str | None = None) -> WeightDistribution:
    T = tutte_polynomial(code, budget, backend=backend)
    return wd_from_tutte(T, code.n, code.rank, code.q)


def characteristic_polynomial(code: LinearCode, budget: int = DEFAULT_TUTTE_BUDGET, *,
                              backend: str | None = None) -> UnivariatePolynomial:
    """chi(t) = sum_A (-1)^|A| t^(r - rk A), straight from the subset ranks."""
    table = rank_table(code, budget, backend=backend)
    r = code.rank
    c = [0] * (r + 1)
    for rk, row in enumerate(table):
        for size, cnt in enumerate(row):
            c[r - rk] += (-1) ** size * cnt
    return UnivariatePolynomial(tuple(c))


def characteristic_from_tutte(T: BivariatePolynomial, r: int) -> UnivariatePolynomial:
    """(-1)^r T(1 - t, 0) as a polynomial in t."""
    out = [0]
    for (i, j), c in T.coeffs.items():
        if j:
            continue
        term = [c * x for x in _poly_pow([1, -1], i)]
        out = [a + b for a, b in zip(out + [0] * (len(term) - len(out)),
                                     term + [0] * (len(out) - len(term)))]
    sign = -1 if r % 2 else 1
    return UnivariatePolynomial(tuple(sign * x for x in out))
