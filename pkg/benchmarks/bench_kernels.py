"""Compare the numba and pure-numpy backends of the two hot kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends must return identical tables; the script exits 1 if they differ.
"""
import argparse
import sys
import time

from logcodes import _kernels
from logcodes.families import gen_family
from logcodes.linear_code import code_make

CASES_HIST = [
    ("hamming2 m=4 [15,11]", dict(family="hamming2", m=4)),
    ("rm2 m=5 [32,16]", dict(family="rm2", m=5)),
    ("golay24 [24,12]", dict(family="golay24")),
    ("hamming_q m=3 q=3 [13,10]", dict(family="hamming_q", m=3, q=3)),
    ("rs_mds [6,4]_5", dict(family="rs_mds", n=6, k=4, q=5)),
    ("hrm2 q=4 m=2 [16,3]", dict(family="hrm2", q=4, m=2)),
]
CASES_RANK = [
    ("hamming2 m=3 [7,4]", dict(family="hamming2", m=3)),
    ("rm1 m=4 [16,5]", dict(family="rm1", m=4)),
    ("rs_mds [10,4]_16", dict(family="rs_mds", n=10, k=4, q=16)),
]


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return out, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; only the numpy backend can run")
        return 1
    mismatch = False
    print(f"{'kernel':<8} {'case':<28} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for kind, cases in (("hist", CASES_HIST), ("ranks", CASES_RANK)):
        for label, params in cases:
            code = code_make(gen_family(**params))
            G, F = code.gen.entries, code.field
            if kind == "hist":
                run = lambda b: _kernels.weight_histogram(G, F, backend=b).tolist()
            else:
                run = lambda b: _kernels.subset_rank_counts(G, F, backend=b).tolist()
            run("numba")  # compile outside the timing
            a, ta = best_of(lambda: run("numba"), args.repeat)
            b, tb = best_of(lambda: run("numpy"), args.repeat)
            mismatch |= a != b
            flag = "" if a == b else "  MISMATCH"
            print(f"{kind:<8} {label:<28} {ta:>10.4f} {tb:>10.4f} {tb / ta:>7.1f}x{flag}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
