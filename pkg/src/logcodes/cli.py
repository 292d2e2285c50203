"""Command-line front end.

Exit codes: 0 success / log-concave / all pass, 1 property violation found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import __version__
from .analysis import GapReport, gap_report, mds_q0, mds_verdict, nonzero
from .errors import LogCodesError
from .families import FAMILIES, FamilySpec, gen_family
from .linear_code import (DEFAULT_BUDGET, WeightDistribution, brute_weight_distribution,
                          code_make, format_matrix, parse_matrix)
from .macwilliams import macwilliams
from .tutte import DEFAULT_TUTTE_BUDGET, wd_via_tutte
from .verify import SUITES

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- documents -------------------------------------------------------------

def wd_to_doc(wd: WeightDistribution) -> dict:
    return {"q": wd.q, "n": wd.n, "k": wd.k, "counts": [str(c) for c in wd.counts]}


def doc_to_wd(doc) -> WeightDistribution:
    try:
        return WeightDistribution(int(doc["q"]), int(doc["n"]), int(doc["k"]),
                                  tuple(int(c) for c in doc["counts"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed distribution document: {exc}") from None


def report_doc(subject: str, rep: GapReport) -> dict:
    return {
        "subject": subject,
        "gap_count": rep.gap_count,
        "violations": list(rep.violations),
        "log_concave": rep.log_concave,
        "unimodal": rep.unimodal,
        "peak_index": rep.peak_index,
        "witnesses": [[w.index, str(w.left), str(w.mid), str(w.right), str(w.defect)]
                      for w in rep.witnesses],
    }


def _log10(c) -> float:
    c = int(c)
    b = c.bit_length()
    if b < 1000:
        return math.log10(c)
    shift = b - 60
    return math.log10(c >> shift) + shift * math.log10(2)


def emit_wd(wd: WeightDistribution, fmt: str, nonzero_only: bool, plot: bool, out) -> None:
    rows = [(i, c) for i, c in enumerate(wd.counts) if c or not nonzero_only]
    if plot:
        out.write("weight,count,log10_count\n")
        for i, c in rows:
            if c:
                out.write(f"{i},{c},{_log10(c):.6f}\n")
        return
    if fmt == "csv":
        out.write("weight,count\n")
        for i, c in rows:
            out.write(f"{i},{c}\n")
        return
    doc = wd_to_doc(wd)
    if nonzero_only:
        doc["weights"] = [i for i, _ in rows]
        doc["nonzero_counts"] = [str(c) for _, c in rows]
    json.dump(doc, out)
    out.write("\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_wd(path: str) -> WeightDistribution:
    try:
        return doc_to_wd(json.loads(_read(path)))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not valid JSON ({exc})") from None


def parse_range(text: str) -> list[int]:
    """'3..14' -> 3..14 inclusive; '5' -> [5]; '3,5,7' -> [3, 5, 7]."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def _family_spec(args) -> FamilySpec:
    params = {k: getattr(args, k) for k in ("n", "k", "m", "q", "r")
              if getattr(args, k, None) is not None}
    if args.family == "rm":
        raise UsageError("use 'gen rm --r R --m M' for generators; closed forms exist for rm1/rm2")
    return FamilySpec(args.family, params)


# --- commands --------------------------------------------------------------

def cmd_family(args, out) -> int:
    if args.family == "mds" and None not in (args.n, args.q) and args.n > args.q + 1:
        print(f"logcodes: note: n = {args.n} > q + 1 = {args.q + 1}; MDS codes with these "
              "parameters are not expected to exist", file=sys.stderr)
    emit_wd(_family_spec(args).weight_distribution(), args.format, args.nonzero,
            args.plot_csv, out)
    return EXIT_OK


def cmd_gen(args, out) -> int:
    params = {k: getattr(args, k) for k in ("n", "k", "m", "q", "r")
              if getattr(args, k, None) is not None}
    out.write(format_matrix(gen_family(args.family, **params)))
    return EXIT_OK


def cmd_check(args, out) -> int:
    if args.input:
        wd, subject = _read_wd(args.input), args.input
    elif args.family:
        spec = _family_spec(args)
        wd, subject = spec.weight_distribution(), spec.label()
    else:
        raise UsageError("check needs a family name or --input FILE")
    rep = gap_report(nonzero(wd))
    json.dump(report_doc(subject, rep), out)
    out.write("\n")
    return EXIT_OK if rep.log_concave else EXIT_VIOLATION


def cmd_dual(args, out) -> int:
    emit_wd(macwilliams(_read_wd(args.input)), args.format, args.nonzero, False, out)
    return EXIT_OK


def _load_code(path: str):
    return code_make(parse_matrix(_read(path)))


def cmd_brute(args, out) -> int:
    wd = brute_weight_distribution(_load_code(args.matrix), args.budget,
                                   backend=args.backend, workers=args.workers)
    emit_wd(wd, args.format, args.nonzero, False, out)
    return EXIT_OK


def cmd_tutte(args, out) -> int:
    wd = wd_via_tutte(_load_code(args.matrix), args.budget, backend=args.backend)
    emit_wd(wd, args.format, args.nonzero, False, out)
    return EXIT_OK


def cmd_mds_threshold(args, out) -> int:
    th = mds_q0(args.n, args.k)
    json.dump({
        "n": th.n, "k": th.k, "m": th.m,
        "coeffs": [str(c) for c in th.coeffs], "scale": th.scale,
        "discriminant": str(th.discriminant),
        "root_intervals": [list(iv) for iv in th.root_intervals],
        "q_min_integer": th.q_min_integer, "note": th.note,
    }, out)
    out.write("\n")
    return EXIT_OK


def cmd_mds_verdict(args, out) -> int:
    v = mds_verdict(args.n, args.k, args.q, mode=args.mode)
    json.dump({"n": v.n, "k": v.k, "q": v.q, "status": v.status, "method": v.method,
               "direct_status": v.direct_status, "gap_count": v.gap_count,
               "violations": list(v.violations), "notes": list(v.notes)}, out)
    out.write("\n")
    return EXIT_OK if v.status == "log_concave" else EXIT_VIOLATION


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    rows = []
    for name in names:
        kw = {}
        if name in ("hamming", "ext_hamming", "rm2", "hrm_prm") and args.m:
            kw["ms"] = args.m
        if name == "hrm_prm" and args.q:
            kw["qs"] = args.q
        rows.extend(SUITES[name](**kw))
    if args.format == "json":
        json.dump([r.__dict__ for r in rows], out)
        out.write("\n")
    else:
        w = max([len(r.subject) for r in rows] + [len("subject")])
        out.write(f"{'suite':<12} {'subject':<{w}}  {'expected':<32} {'observed':<32} result\n")
        for r in rows:
            out.write(f"{r.suite:<12} {r.subject:<{w}}  {r.expected:<32} {r.observed:<32} "
                      f"{'PASS' if r.passed else 'FAIL'}\n")
        out.write(f"{sum(r.passed for r in rows)}/{len(rows)} passed\n")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_VIOLATION


# --- parser ----------------------------------------------------------------

def _add_params(p) -> None:
    for name in ("n", "k", "m", "q", "r"):
        p.add_argument(f"--{name}", type=int)


def _add_output(p, plot: bool = False) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--nonzero", action="store_true", help="keep only nonzero counts")
    if plot:
        p.add_argument("--plot-csv", action="store_true",
                       help="weight,count,log10(count) rows for plotting")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="logcodes", description=(
        "Weight distributions of linear codes and their log-concavity."))
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="closed-form weight distribution")
    p.add_argument("family", choices=FAMILIES)
    _add_params(p)
    _add_output(p, plot=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("gen", help="generator matrix in the text format")
    p.add_argument("family", choices=("simplex", "hamming_q", "hamming2", "ext_hamming2", "rm",
                                      "rm1", "rm2", "hrm2", "prm2", "rs_mds", "golay23",
                                      "golay24", "full_space", "even"))
    _add_params(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="gap / unimodality report (exit 1 if gaps)")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("--input", help="distribution JSON file ('-' for stdin)")
    _add_params(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", help="MacWilliams transform of a distribution document")
    p.add_argument("input", help="distribution JSON file ('-' for stdin)")
    _add_output(p)
    p.set_defaults(func=cmd_dual)

    for name, func, budget, helptext in (
            ("brute", cmd_brute, DEFAULT_BUDGET, "enumerate all codewords"),
            ("tutte", cmd_tutte, DEFAULT_TUTTE_BUDGET, "distribution via the Tutte polynomial")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("matrix", help="generator matrix file ('-' for stdin)")
        p.add_argument("--budget", type=int, default=budget)
        p.add_argument("--backend", choices=("numba", "numpy"))
        if name == "brute":
            p.add_argument("--workers", type=int)
        _add_output(p)
        p.set_defaults(func=func)

    p = sub.add_parser("mds-threshold", aliases=["threshold"], help="q0(n, k) quadratic")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_mds_threshold)

    p = sub.add_parser("mds-verdict", aliases=["verdict"], help="MDS log-concavity verdict")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--mode", choices=("auto", "theorem", "direct"), default="auto")
    p.set_defaults(func=cmd_mds_verdict)

    p = sub.add_parser("verify", help="theorem sweeps with PASS/FAIL rows")
    p.add_argument("suite", choices=list(SUITES) + ["all"])
    p.add_argument("--m", type=parse_range)
    p.add_argument("--q", type=parse_range)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, LogCodesError, OSError) as exc:
        print(f"logcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
