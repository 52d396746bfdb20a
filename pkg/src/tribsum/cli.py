"""Command-line interface.

Subcommands: term, sum, verify, oeis-check, bench, catalog.  Results print
as plain text by default; ``--format json`` emits one self-contained JSON
record per result (newline-delimited).  Exit codes: 0 success, 2 usage or
precondition error, 3 verification mismatch, 4 OEIS check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional

from . import oracle, verify
from .catalog import UnknownSequence, list_all, lookup
from .core import (
    NegativeIndexWithZeroT,
    SequenceDef,
    as_rational,
    format_rational,
    term_matrix,
)
from .oeis import (
    FetchFailed,
    FixtureMissing,
    MalformedBFile,
    AlignmentStatus,
    Source,
    align,
    fetch_bfile,
)
from .sums import Direction, Parity, SumMismatch, SumQuery, evaluate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_OEIS = 4

_PARAM_FLAGS = ("r", "s", "t", "w0", "w1", "w2")


def _add_sequence_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seq", help="catalog key (see the catalog subcommand)")
    for flag in _PARAM_FLAGS:
        parser.add_argument(f"--{flag}", help="rational literal, 'p' or 'p/q'")


def _sequence_from_args(args: argparse.Namespace) -> SequenceDef:
    explicit = [flag for flag in _PARAM_FLAGS if getattr(args, flag) is not None]
    if args.seq is not None:
        if explicit:
            raise ValueError("--seq and explicit parameters are mutually exclusive")
        return lookup(args.seq).definition
    if len(explicit) != len(_PARAM_FLAGS):
        missing = [f"--{f}" for f in _PARAM_FLAGS if getattr(args, f) is None]
        raise ValueError(f"need --seq or all of --r/--s/--t/--w0/--w1/--w2 "
                         f"(missing {', '.join(missing)})")
    values = {flag: as_rational(getattr(args, flag)) for flag in _PARAM_FLAGS}
    return SequenceDef.of(values["r"], values["s"], values["t"],
                          values["w0"], values["w1"], values["w2"])


def _emit(args: argparse.Namespace, record: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _cmd_term(args: argparse.Namespace) -> int:
    seq = _sequence_from_args(args)
    value = term_matrix(seq, args.n)
    rendered = format_rational(value)
    _emit(args, {"command": "term", "seq": args.seq, "n": args.n,
                 "value": rendered}, rendered)
    return EXIT_OK


def _cmd_sum(args: argparse.Namespace) -> int:
    seq = _sequence_from_args(args)
    query = SumQuery(Direction(args.dir), Parity(args.parity), args.n)
    result = evaluate(seq, query, check=args.check)
    rendered = format_rational(result.value)
    _emit(args, {"command": "sum", "seq": args.seq, "dir": args.dir,
                 "parity": args.parity, "n": args.n, "value": rendered,
                 "case_used": result.case_used.name,
                 "oracle_checked": result.oracle_checked},
          f"{rendered} ({result.case_used.name})")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = verify.run_all(max_n=args.max_n, seq_filter=args.seq,
                             random_count=args.random, seed=args.seed)
    all_ok = all(r.succeeded for r in reports)
    for report in reports:
        record = {"command": "verify", "suite": report.name,
                  "passed": report.passed, "failed": report.failed,
                  "status": "PASS" if report.succeeded else "FAIL"}
        text = (f"{report.name}: {'PASS' if report.succeeded else 'FAIL'} "
                f"({report.passed} passed, {report.failed} failed)")
        _emit(args, record, text)
        for failure in report.failures:
            print(f"  {failure}", file=sys.stderr)
    total = sum(r.passed for r in reports)
    _emit(args, {"command": "verify", "suite": "total", "passed": total,
                 "failed": sum(r.failed for r in reports),
                 "status": "PASS" if all_ok else "FAIL"},
          f"{'PASS' if all_ok else 'FAIL'}: {total} checks")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def _cmd_oeis_check(args: argparse.Namespace) -> int:
    entries = list_all()
    if args.seq is not None:
        entries = [lookup(args.seq)]
    source = Source.NETWORK if args.network else Source.FIXTURE_DIR
    fixture_dir = Path(args.fixture_dir) if args.fixture_dir else None
    any_failed = False
    for entry in entries:
        oeis_id = entry.primary_oeis_id
        if oeis_id is None:
            _emit(args, {"command": "oeis-check", "seq": entry.key,
                         "status": "skipped", "reason": "no OEIS id"},
                  f"{entry.key}: skipped: no OEIS id")
            continue
        try:
            bfile = fetch_bfile(oeis_id, source, fixture_dir)
        except (FixtureMissing, FetchFailed, MalformedBFile) as exc:
            any_failed = True
            _emit(args, {"command": "oeis-check", "seq": entry.key,
                         "oeis_id": oeis_id, "status": "error",
                         "reason": str(exc)},
                  f"{entry.key}: {oeis_id} error: {exc}")
            continue
        report = align(entry.definition, bfile)
        if report.status is AlignmentStatus.NO_ALIGNMENT:
            any_failed = True
            _emit(args, {"command": "oeis-check", "seq": entry.key,
                         "oeis_id": oeis_id, "status": "no-alignment"},
                  f"{entry.key}: {oeis_id} no alignment found")
            continue
        matched = min(report.matched_terms, args.count)
        ok = matched >= args.count
        if not ok:
            any_failed = True
        _emit(args, {"command": "oeis-check", "seq": entry.key,
                     "oeis_id": oeis_id, "status": "aligned",
                     "shift": report.shift, "matched": matched,
                     "requested": args.count,
                     "ok": ok},
              f"{entry.key}: {oeis_id} aligned (shift {report.shift}), "
              f"{matched}/{args.count} match")
    return EXIT_OEIS if any_failed else EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    seq = lookup(args.seq).definition if args.seq else lookup("tribonacci").definition
    header = f"{'n':>10} {'closed_ns':>14} {'oracle_ns':>14} {'speedup':>9}"
    if args.format == "text":
        print(header)
    for n in args.n:
        query = SumQuery(Direction.FORWARD, Parity.ALL, n)
        start = time.perf_counter_ns()
        closed = evaluate(seq, query)
        closed_ns = time.perf_counter_ns() - start
        start = time.perf_counter_ns()
        naive = oracle.oracle_sum(seq, query)
        oracle_ns = time.perf_counter_ns() - start
        if closed.value != naive:
            print(f"mismatch at n={n}", file=sys.stderr)
            return EXIT_MISMATCH
        ratio = oracle_ns / closed_ns if closed_ns else float("inf")
        _emit(args, {"command": "bench", "seq": args.seq, "n": n,
                     "case_used": closed.case_used.name,
                     "closed_ns": closed_ns, "oracle_ns": oracle_ns,
                     "speedup": round(ratio, 2)},
              f"{n:>10} {closed_ns:>14} {oracle_ns:>14} {ratio:>8.1f}x")
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace) -> int:
    for entry in list_all():
        seq = entry.definition
        params = (f"r={format_rational(seq.params.r)} "
                  f"s={format_rational(seq.params.s)} "
                  f"t={format_rational(seq.params.t)}")
        init = (f"W0={format_rational(seq.w0)} W1={format_rational(seq.w1)} "
                f"W2={format_rational(seq.w2)}")
        ids = ", ".join(entry.oeis_ids) if entry.oeis_ids else "-"
        _emit(args, {"command": "catalog", "key": entry.key,
                     "display_name": entry.display_name,
                     "params": params, "initial": init,
                     "oeis_ids": list(entry.oeis_ids)},
              f"{entry.key:30} {params:18} {init:18} {ids}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribsum",
        description="Exact terms and closed-form partial sums of "
                    "generalized Tribonacci sequences.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_term = sub.add_parser("term", help="evaluate W_n at a signed index")
    _add_sequence_args(p_term)
    p_term.add_argument("--n", type=int, required=True)
    p_term.set_defaults(func=_cmd_term)

    p_sum = sub.add_parser("sum", help="evaluate a partial sum")
    _add_sequence_args(p_sum)
    p_sum.add_argument("--dir", choices=("fwd", "bwd"), required=True)
    p_sum.add_argument("--parity", choices=("all", "even", "odd"), required=True)
    p_sum.add_argument("--n", type=int, required=True)
    p_sum.add_argument("--check", action="store_true",
                       help="also run the literal sum and fail on mismatch")
    p_sum.set_defaults(func=_cmd_sum)

    p_verify = sub.add_parser("verify", help="run the verification sweeps")
    p_verify.add_argument("--seq", help="restrict to one catalog key")
    p_verify.add_argument("--max-n", type=int, default=100)
    p_verify.add_argument("--random", type=int, default=0, metavar="K",
                          help="additionally check K random parameter sets")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_oeis = sub.add_parser("oeis-check",
                            help="compare catalog sequences against OEIS b-files")
    p_oeis.add_argument("--seq", help="restrict to one catalog key")
    p_oeis.add_argument("--count", type=int, default=50)
    p_oeis.add_argument("--network", action="store_true",
                        help="fetch from oeis.org instead of local fixtures")
    p_oeis.add_argument("--fixture-dir", help="override the fixture directory")
    p_oeis.set_defaults(func=_cmd_oeis_check)

    p_bench = sub.add_parser("bench",
                             help="time closed-form sums against the naive sum")
    p_bench.add_argument("--seq", default="tribonacci")
    p_bench.add_argument("--n", type=int, nargs="+",
                         default=[1_000, 10_000, 100_000])
    p_bench.set_defaults(func=_cmd_bench)

    p_cat = sub.add_parser("catalog", help="list the built-in sequences")
    p_cat.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SumMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UnknownSequence, NegativeIndexWithZeroT, ValueError,
            ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
