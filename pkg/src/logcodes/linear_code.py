"""Linear codes over GF(q): row reduction, duals, brute-force weight counts."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from ._bigint import INT_TYPES, is_int
from .errors import BadParams, BudgetExceeded, RankDeficient
from .field import FieldSpec, field_make

DEFAULT_BUDGET = 1 << 28
_EXACT_TYPES = frozenset(INT_TYPES)


@dataclass(frozen=True)
class WeightDistribution:
    """counts[i] = number of codewords of Hamming weight i.

    Counts are exact integers: ``int``, or ``gmpy2.mpz`` for the long
    closed-form families.
    """

    q: int
    n: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(self.counts)
        if not {type(c) for c in counts} <= _EXACT_TYPES:
            counts = tuple(c if is_int(c) else int(c) for c in counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("negative weight count")
        if counts[0] != 1:
            raise ValueError(f"A_0 must be 1 for a linear code, got {counts[0]}")
        total = sum(counts)
        if total != self.q ** self.k:
            raise ValueError(f"counts sum to {total}, expected q^k = {self.q}^{self.k}")

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def is_symmetric(self) -> bool:
        return self.counts == self.counts[::-1]

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.counts) if c]


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    field: FieldSpec
    entries: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64)
        if a.ndim == 1 and a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2:
            raise BadParams("generator must be a 2-d array")
        if a.size and (a.min() < 0 or a.max() >= self.field.q):
            raise BadParams(f"entries must lie in [0, {self.field.q})")
        if a.shape[0] > a.shape[1]:
            raise BadParams(f"k = {a.shape[0]} exceeds n = {a.shape[1]}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other):
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.field, self.entries.tobytes(), self.entries.shape))


def rref(F: FieldSpec, rows: Sequence[Sequence[int]], ncols: int):
    """Reduced row-echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(map(int, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        s = F.inv(m[r][c])
        m[r] = [F.mul(s, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = F.neg(m[i][c])
                m[i] = [F.add(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A code held by its reduced row-echelon generator."""

    gen: GeneratorMatrix
    pivot_columns: tuple[int, ...]

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def q(self) -> int:
        return self.gen.field.q

    @property
    def n(self) -> int:
        return self.gen.n

    @property
    def rank(self) -> int:
        return self.gen.k

    k = rank

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> "LinearCode":
        return cls(GeneratorMatrix(F, np.zeros((0, n), dtype=np.int64)), ())

    def same_space(self, other: "LinearCode") -> bool:
        return self.field == other.field and self.gen == other.gen

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.rank}] over GF({self.q}))"


def code_make(gen: GeneratorMatrix) -> LinearCode:
    """Row-reduce ``gen``; its row count is the claimed dimension."""
    rows, pivots = rref(gen.field, gen.entries.tolist(), gen.n)
    if len(rows) != gen.k:
        raise RankDeficient(len(rows))
    if not rows:
        return LinearCode.zero(gen.field, gen.n)
    return LinearCode(GeneratorMatrix(gen.field, np.array(rows)), tuple(pivots))


def make_code(q: int, rows: Iterable[Iterable[int]], n: int | None = None) -> LinearCode:
    """Convenience constructor from plain integer rows."""
    rows = [list(r) for r in rows]
    if n is None:
        n = len(rows[0]) if rows else 0
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    return code_make(GeneratorMatrix(field_make(q), arr))


def dual_code(code: LinearCode) -> LinearCode:
    """Dual code via the standard form [I_k | A] -> [-A^T | I_{n-k}]."""
    F, n, k = code.field, code.n, code.rank
    if k == 0:
        return code_make(GeneratorMatrix(F, np.eye(n, dtype=np.int64)))
    if k == n:
        return LinearCode.zero(F, n)
    G = code.gen.entries.tolist()
    piv = list(code.pivot_columns)
    free = [c for c in range(n) if c not in set(piv)]
    H = []
    for c in free:
        row = [0] * n
        row[c] = 1
        for i, pc in enumerate(piv):
            row[pc] = F.neg(G[i][c])
        H.append(row)
    return code_make(GeneratorMatrix(F, np.array(H, dtype=np.int64)))


def brute_weight_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET, *,
                              backend: str | None = None,
                              workers: int | None = None) -> WeightDistribution:
    """Count weights by enumerating all q**k codewords."""
    need = code.q ** code.rank
    if need > budget:
        raise BudgetExceeded(need, budget)
    hist = _kernels.weight_histogram(code.gen.entries, code.field,
                                     backend=backend, workers=workers)
    return WeightDistribution(code.q, code.n, code.rank, tuple(int(x) for x in hist))


# --- generator matrix text format ---------------------------------------

def format_matrix(gen: GeneratorMatrix) -> str:
    lines = [f"{gen.field.q} {gen.n} {gen.k}"]
    lines += [" ".join(str(int(x)) for x in row) for row in gen.entries]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GeneratorMatrix:
    """Parse ``q n k`` followed by k rows of n integers; ``#`` starts a comment line."""
    lines = [ln.split() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 3:
        raise BadParams("matrix header must be 'q n k'")
    try:
        q, n, k = map(int, lines[0])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise BadParams(f"non-integer entry: {exc}") from None
    if len(rows) != k:
        raise BadParams(f"header declares k = {k} rows, found {len(rows)}")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise BadParams(f"row {i} has {len(r)} entries, expected n = {n}")
    return GeneratorMatrix(field_make(q), np.array(rows, dtype=np.int64).reshape(k, n))
