"""Hot loops: codeword weight histograms and column-subset rank tables.

Two backends implement the same contracts:

* ``numba``: compiled Gray-code walks (``@njit``, ``nogil``) so the index
  range can be split across threads;
* ``numpy``: block-vectorised enumeration over GF(p) digit vectors and
  batched row reduction of every column subset (different traversals, so
  the two backends cross-check each other).

``LOGCODES_BACKEND=numpy`` forces the fallback; the default is numba when it
imports.  Results never depend on the backend.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    want = os.environ.get("LOGCODES_BACKEND", "").strip().lower()
    if want == "numpy" or not HAVE_NUMBA:
        return "numpy"
    if want not in ("", "numba"):
        raise ValueError(f"LOGCODES_BACKEND must be one of {BACKENDS}, got {want!r}")
    return "numba"


def _resolve(backend: str | None) -> str:
    backend = backend or default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


def _njit(fn):
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


# ---------------------------------------------------------------------------
# small scalar helpers (compiled inline by numba when available)

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U56 = np.uint64(56)


@_njit
def _popcount64(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return (x * _H01) >> _U56


@_njit
def _ctz(s):
    t = 0
    while s & 1 == 0:
        s >>= 1
        t += 1
    return t


@_njit
def _vp(s, p):
    t = 0
    while s % p == 0:
        s //= p
        t += 1
    return t


@_njit
def _fadd(a, b, p, e):
    if p == 2:
        return a ^ b
    if e == 1:
        return (a + b) % p
    out = 0
    scale = 1
    for _ in range(e):
        out += ((a % p + b % p) % p) * scale
        a //= p
        b //= p
        scale *= p
    return out


@_njit
def _fmul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


# ---------------------------------------------------------------------------
# weight histograms, numba path

@_njit
def _gray_hist_char2(planes, n, start, stop):
    """Binary reflected Gray walk over indices [start, stop).

    ``planes[j, b, w]`` is word w of bit-plane b of the j-th GF(2)-spanning
    vector.  A coordinate is nonzero when any of its bit-planes is set.
    """
    K, e, W = planes.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    c = np.zeros((e, W), dtype=np.uint64)
    g = start ^ (start >> 1)
    for j in range(K):
        if (g >> j) & 1:
            for b in range(e):
                for w in range(W):
                    c[b, w] ^= planes[j, b, w]
    for s in range(start, stop):
        if s > start:
            j = _ctz(s)
            for b in range(e):
                for w in range(W):
                    c[b, w] ^= planes[j, b, w]
        wt = 0
        for w in range(W):
            acc = np.uint64(0)
            for b in range(e):
                acc |= c[b, w]
            wt += np.int64(_popcount64(acc))
        hist[wt] += 1
    return hist


@_njit
def _gray_hist_odd(H, p, e, start, stop):
    """Modular p-ary Gray walk: step s adds spanning vector v_p(s)."""
    K, n = H.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    # nonzero coordinates of each spanning vector
    nnz = np.zeros(K, dtype=np.int64)
    idx = np.zeros((K, n), dtype=np.int64)
    for j in range(K):
        for x in range(n):
            if H[j, x] != 0:
                idx[j, nnz[j]] = x
                nnz[j] += 1
    c = np.zeros(n, dtype=np.int64)
    rest = start
    digits = np.zeros(K + 1, dtype=np.int64)
    for j in range(K):
        digits[j] = rest % p
        rest //= p
    for j in range(K):
        gd = (digits[j] - digits[j + 1]) % p
        for _ in range(gd):
            for t in range(nnz[j]):
                x = idx[j, t]
                c[x] = _fadd(c[x], H[j, x], p, e)
    wt = 0
    for x in range(n):
        if c[x] != 0:
            wt += 1
    for s in range(start, stop):
        if s > start:
            j = _vp(s, p)
            for t in range(nnz[j]):
                x = idx[j, t]
                old = c[x]
                new = _fadd(old, H[j, x], p, e)
                c[x] = new
                if old == 0:
                    wt += 1
                if new == 0:
                    wt -= 1
        hist[wt] += 1
    return hist


def _spanning_vectors(gen: np.ndarray, field) -> np.ndarray:
    """GF(p)-spanning set {beta_t * g_i}: all codewords are GF(p) combinations."""
    k, n = gen.shape
    rows = []
    for i in range(k):
        for t in range(field.e):
            beta = field.p ** t
            rows.append([field.mul(beta, int(v)) for v in gen[i]])
    return np.array(rows, dtype=np.int64).reshape(k * field.e, n)


def _bit_planes(H: np.ndarray, e: int) -> np.ndarray:
    K, n = H.shape
    W = max(1, (n + 63) // 64)
    planes = np.zeros((K, e, W), dtype=np.uint64)
    for j in range(K):
        for x in range(n):
            v = int(H[j, x])
            for b in range(e):
                if (v >> b) & 1:
                    planes[j, b, x // 64] |= np.uint64(1) << np.uint64(x % 64)
    return planes


def _numba_hist(H, field, n, total, workers):
    p, e = field.p, field.e
    if workers is None:
        # threads only pay off once the walk is long
        workers = min(os.cpu_count() or 1, 8) if total >= (1 << 20) else 1
    workers = max(1, int(workers))
    bounds = [total * i // workers for i in range(workers + 1)]
    chunks = [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]
    if p == 2:
        planes = _bit_planes(H, e)
        run = lambda ab: _gray_hist_char2(planes, n, ab[0], ab[1])  # noqa: E731
    else:
        run = lambda ab: _gray_hist_odd(H, p, e, ab[0], ab[1])  # noqa: E731
    if len(chunks) == 1:
        parts = [run(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(run, chunks))
    hist = np.zeros(n + 1, dtype=np.int64)
    for part in parts:
        hist += part
    return hist


# ---------------------------------------------------------------------------
# weight histograms, numpy path

def _numpy_hist(H, field, n, block_log2=16):
    p, e = field.p, field.e
    K = H.shape[0]
    dtype = np.int32 if p < (1 << 15) else np.int64
    Hd = np.zeros((K, n, e), dtype=dtype)
    for t in range(e):
        Hd[:, :, t] = (H // p ** t) % p
    Hd = Hd.reshape(K, n * e)
    hist = np.zeros(n + 1, dtype=np.int64)
    if K == 0:
        hist[0] = 1
        return hist
    # low part: every GF(p) combination of the first L spanning vectors
    L = 1
    while L < K and p ** (L + 1) <= (1 << block_log2):
        L += 1
    low = np.zeros((1, n * e), dtype=dtype)
    for j in range(L):
        low = np.concatenate([(low + a * Hd[j]) % p for a in range(p)])
    high_rows = Hd[L:]
    R = K - L
    for combo in range(p ** R):
        offset = np.zeros(n * e, dtype=np.int64)
        c = combo
        for j in range(R):
            c, d = divmod(c, p)
            if d:
                offset += d * high_rows[j]
        block = (low + (offset % p).astype(dtype)) % p
        weights = block.reshape(-1, n, e).any(axis=2).sum(axis=1)
        hist += np.bincount(weights, minlength=n + 1)
    return hist


def weight_histogram(gen: np.ndarray, field, *, backend: str | None = None,
                     workers: int | None = None) -> np.ndarray:
    """Histogram of Hamming weights over all q**k combinations of ``gen`` rows.

    ``gen`` is a k x n array of field elements (rows need not be independent;
    dependent rows just repeat codewords).
    """
    gen = np.asarray(gen, dtype=np.int64)
    k, n = gen.shape
    if k == 0:
        hist = np.zeros(n + 1, dtype=np.int64)
        hist[0] = 1
        return hist
    H = _spanning_vectors(gen, field)
    total = field.p ** H.shape[0]
    if _resolve(backend) == "numba":
        return _numba_hist(H, field, n, total, workers)
    return _numpy_hist(H, field, n)


# ---------------------------------------------------------------------------
# column-subset ranks

@_njit
def _subset_rank_walk(cols, k, p, e, exp, log, inv, neg):
    """counts[r, s] = number of column subsets of size s and rank r.

    Subsets are walked in binary counting order with column 0 as the most
    significant decision, so consecutive subsets share a prefix and the
    echelon basis of that prefix is reused; truncating the basis restores it.
    """
    n = cols.shape[0]
    counts = np.zeros((k + 1, n + 1), dtype=np.int64)
    counts[0, 0] = 1
    kk = max(k, 1)
    basis = np.zeros((kk, kk), dtype=np.int64)
    piv = np.zeros(kk, dtype=np.int64)
    r_before = np.zeros(n + 1, dtype=np.int64)
    v = np.zeros(kk, dtype=np.int64)
    for m in range(1, 1 << n):
        d = n - 1 - _ctz(m)
        r = r_before[d]
        for t in range(k):
            v[t] = cols[d, t]
        for b in range(r):
            c = v[piv[b]]
            if c != 0:
                for t in range(k):
                    bt = basis[b, t]
                    if bt != 0:
                        v[t] = _fadd(v[t], neg[_fmul(c, bt, exp, log)], p, e)
        lead = -1
        for t in range(k):
            if v[t] != 0:
                lead = t
                break
        if lead >= 0:
            s = inv[v[lead]]
            for t in range(k):
                basis[r, t] = _fmul(s, v[t], exp, log)
            piv[r] = lead
            r += 1
        for t in range(d + 1, n + 1):
            r_before[t] = r
        size = 0
        mm = m
        while mm:
            size += mm & 1
            mm >>= 1
        counts[r, size] += 1
    return counts


def _vadd(a, b, p, e):
    if p == 2:
        return a ^ b
    if e == 1:
        return (a + b) % p
    out = np.zeros_like(a)
    scale = 1
    for _ in range(e):
        out += ((a // scale) % p + (b // scale) % p) % p * scale
        scale *= p
    return out


def _vmul(a, b, exp, log):
    la, lb = log[a], log[b]
    out = exp[np.where((la < 0) | (lb < 0), 0, la + lb)]
    return np.where((a == 0) | (b == 0), 0, out)


def _numpy_subset_ranks(gen, field, batch_log2=14):
    """Batched row reduction of every column-masked copy of ``gen``."""
    k, n = gen.shape
    t = field.tables
    exp, log, inv, neg = t["exp"], t["log"], t["inv"], t["neg"]
    p, e = field.p, field.e
    counts = np.zeros((k + 1, n + 1), dtype=np.int64)
    total = 1 << n
    step = 1 << min(n, batch_log2)
    rows = np.arange(k)
    for lo in range(0, total, step):
        masks = np.arange(lo, min(lo + step, total), dtype=np.int64)
        B = masks.size
        keep = (masks[:, None] >> np.arange(n)[None, :]) & 1
        A = np.where(keep[:, None, :] == 1, gen[None, :, :], 0)
        ptr = np.zeros(B, dtype=np.int64)
        bidx = np.arange(B)
        for col in range(n):
            cand = (A[:, :, col] != 0) & (rows[None, :] >= ptr[:, None])
            has = cand.any(axis=1)
            if not has.any():
                continue
            b = bidx[has]
            pr = cand[has].argmax(axis=1)
            tgt = ptr[has]
            prow = A[b, pr].copy()
            A[b, pr] = A[b, tgt]
            scale = inv[prow[:, col]]
            prow = _vmul(scale[:, None], prow, exp, log)
            A[b, tgt] = prow
            # clear the column below the pivot
            below = rows[None, :] > tgt[:, None]
            f = np.where(below, A[b, :, col], 0)
            sub = _vmul(f[:, :, None], prow[:, None, :], exp, log)
            A[b] = _vadd(A[b], neg[sub], p, e)
            ptr[has] += 1
        sizes = keep.sum(axis=1)
        np.add.at(counts, (ptr, sizes), 1)
    return counts


def subset_rank_counts(gen: np.ndarray, field, *, backend: str | None = None) -> np.ndarray:
    """counts[r, s]: number of column subsets of size s spanning rank r."""
    gen = np.asarray(gen, dtype=np.int64)
    k, n = gen.shape
    if _resolve(backend) == "numba":
        t = field.tables
        cols = np.ascontiguousarray(gen.T)
        return _subset_rank_walk(cols, k, field.p, field.e,
                                 t["exp"], t["log"], t["inv"], t["neg"])
    return _numpy_subset_ranks(gen, field)
