"""Command-line front end.

Every library capability is reachable from here with machine-readable
output. Data goes to stdout, diagnostics to stderr. Two formats:

* tsv (default): tab-separated values, one record per line, fixed column
  order per command (documented in the README);
* json: JSON-lines, one object per record, schema versioned with "v": 1.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 range
overflow, 4 bundled-table mismatch.

The LUCASZECK_THREADS environment variable caps the worker processes
used by the heavier scans (verify --suite theorem-m1 and
density --mode enum); output is identical for any worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib.resources import files

from .sequences import (
    FIBONACCI,
    LUCAS,
    RecurrenceSpec,
    SequenceOverflowError,
    b_count,
    golden_char,
    golden_prefix,
    term,
)
from .partitions import (
    canonical_partition,
    count_partitions,
    enumerate_partitions,
    fibonacci_zeckendorf,
    max_partition_count,
    verify_successor_pair,
    verify_sum_coverage,
)
from .fixed_terms import (
    double_partition_values,
    integers_with_summand,
    smallest_summand_sequence,
    verify_double_partition_gaps,
    verify_gap_structure,
)
from .density import count_nonunique, density_report

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_TABLE_MISMATCH = 4

_VERIFY_DEFAULT_BOUNDS = {
    "lemma3": 22,
    "lemma5": 10,
    "theorem-m1": 10_000,
    "gaps": 1_000,
    "golden": 100_000,
}


def _workers() -> int:
    raw = os.environ.get("LUCASZECK_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer LUCASZECK_THREADS={raw!r}", file=sys.stderr)
        return 1
    return max(n, 1)


def _emit(args: argparse.Namespace, cmd: str, inputs: dict, results: list[dict]) -> None:
    for result in results:
        if args.format == "json":
            record = {"v": 1, "cmd": cmd, "inputs": inputs,
                      "result": result, "status": result.get("status", "ok")}
            print(json.dumps(record))
        else:
            print("\t".join(str(v) for v in result.values()))


def _parse_custom(params: str | None) -> RecurrenceSpec:
    if params is None:
        raise ValueError("--seq custom requires --params p,q,a0,a1")
    parts = params.split(",")
    if len(parts) != 4:
        raise ValueError("--params must be four comma-separated integers: p,q,a0,a1")
    p, q, a0, a1 = (int(part) for part in parts)
    if min(p, q, a0, a1) < 1:
        raise ValueError("custom sequences need p, q >= 1 and strictly positive seeds")
    return RecurrenceSpec(p=p, q=q, a0=a0, a1=a1)


def _resolve_spec(args: argparse.Namespace) -> RecurrenceSpec:
    if args.seq == "lucas":
        return LUCAS
    if args.seq == "fib":
        return FIBONACCI
    return _parse_custom(args.params)


def cmd_decompose(args: argparse.Namespace) -> int:
    spec = _resolve_spec(args)
    if args.all:
        if args.n < 0:
            raise ValueError("n must be >= 0 with --all")
        parts = enumerate_partitions(args.n, spec).partitions
    else:
        if args.n < 1:
            raise ValueError("n must be >= 1")
        if args.seq == "lucas":
            parts = (canonical_partition(args.n),)
        elif args.seq == "fib":
            parts = (fibonacci_zeckendorf(args.n),)
        else:
            raise ValueError("custom sequences support --all only")
    results = []
    for part in parts:
        results.append({
            "n": args.n,
            "indices": ",".join(map(str, part.indices)),
            "values": ",".join(map(str, part.values(spec))),
        })
    inputs = {"n": args.n, "seq": args.seq, "all": bool(args.all)}
    _emit(args, "decompose", inputs, results)
    return EXIT_OK


def cmd_zset(args: argparse.Namespace) -> int:
    values = integers_with_summand(args.k, args.count)
    results = [{"k": args.k, "ordinal": i, "value": v}
               for i, v in enumerate(values, start=1)]
    _emit(args, "zset", {"k": args.k, "count": args.count}, results)
    return EXIT_OK


def cmd_kset(args: argparse.Namespace) -> int:
    values = double_partition_values(args.count).values
    results = [{"ordinal": i, "value": v} for i, v in enumerate(values, start=1)]
    _emit(args, "kset", {"count": args.count}, results)
    return EXIT_OK


def cmd_qseq(args: argparse.Namespace) -> int:
    seq = smallest_summand_sequence(args.k, args.count)
    results = [{"k": args.k, "ordinal": i, "value": v}
               for i, v in enumerate(seq.values, start=1)]
    _emit(args, "qseq", {"k": args.k, "count": args.count}, results)
    return EXIT_OK


def _density_row(N: int, mode: str, workers: int) -> dict:
    report = density_report(N)
    c = report.c if mode == "formula" else count_nonunique(N, "enum", workers)
    return {
        "N": N,
        "mode": mode,
        "c": c,
        "beta": report.beta_string(),
        "percent": report.percent_string(),
        "alpha_gap": report.alpha_gap,
    }


def _load_bundled_table() -> list[tuple[int, int, str]]:
    raw = files("lucaszeck").joinpath("data/density_table.tsv").read_text()
    rows = []
    for line in raw.strip().splitlines():
        n, c, percent = line.split("\t")
        rows.append((int(n), int(c), percent))
    return rows


def cmd_density(args: argparse.Namespace) -> int:
    if args.table4:
        mismatches = 0
        results = []
        for n, want_c, want_percent in _load_bundled_table():
            report = density_report(n)
            ok = report.c == want_c and report.percent_string() == want_percent
            mismatches += 0 if ok else 1
            results.append({
                "N": n,
                "c": report.c,
                "percent": report.percent_string(),
                "expected_c": want_c,
                "expected_percent": want_percent,
                "status": "ok" if ok else "mismatch",
            })
        _emit(args, "density", {"table4": True}, results)
        if mismatches:
            print(f"error: {mismatches} table row(s) mismatch", file=sys.stderr)
            return EXIT_TABLE_MISMATCH
        return EXIT_OK

    if args.max < 1:
        raise ValueError("--max must be >= 1")
    workers = _workers()
    modes = ["formula", "enum"] if args.mode == "both" else [args.mode]
    results = [_density_row(args.max, mode, workers) for mode in modes]
    _emit(args, "density", {"max": args.max, "mode": args.mode}, results)
    if len(results) == 2 and results[0]["c"] != results[1]["c"]:
        print("error: formula and enumeration counts disagree", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _verify_lemma3(bound: int) -> tuple[bool, str]:
    for m in range(bound + 1):
        if not verify_sum_coverage(m):
            return False, f"coverage law fails at m={m}"
    return True, f"coverage law holds for m=0..{bound}"


def _verify_lemma5(bound: int) -> tuple[bool, str]:
    for m in range(bound + 1):
        if not verify_successor_pair(m):
            return False, f"two-partition successor fails at m={m}"
    return True, f"two-partition successors hold for m=0..{bound}"


def _verify_theorem_m1(bound: int, workers: int) -> tuple[bool, str]:
    top = max_partition_count(bound, workers=workers)
    if top > 2:
        first = next(n for n in range(1, bound + 1) if count_partitions(n) > 2)
        return False, f"count {count_partitions(first)} at n={first}"
    return True, f"max count {top}"


def _verify_gaps(count: int) -> tuple[bool, str]:
    for k in range(7):
        if not verify_gap_structure(k, count):
            return False, f"gap structure fails for smallest summand k={k}"
    if not verify_double_partition_gaps(count):
        return False, "gap structure fails for the two-partition values"
    return True, f"gap structure holds for k=0..6 and the two-partition values ({count} elements)"


def _verify_golden(bound: int) -> tuple[bool, str]:
    prefix = golden_prefix(bound)
    seen = 0
    for n in range(1, bound + 1):
        if prefix[n - 1] == "B":
            seen += 1
        if seen != b_count(n):
            return False, f"B count mismatch at n={n}"
    i = 2
    while True:
        f = term(FIBONACCI, i)
        if f > bound:
            break
        want = "B" if i % 2 == 0 else "A"
        if golden_char(f) != want:
            return False, f"character mismatch at position F_{i}={f}"
        i += 1
    return True, f"golden string consistent up to n={bound}"


def cmd_verify(args: argparse.Namespace) -> int:
    bound = args.max if args.max is not None else _VERIFY_DEFAULT_BOUNDS[args.suite]
    if bound < 0:
        raise ValueError("--max must be >= 0")
    if args.suite == "lemma3":
        ok, detail = _verify_lemma3(bound)
    elif args.suite == "lemma5":
        ok, detail = _verify_lemma5(bound)
    elif args.suite == "theorem-m1":
        ok, detail = _verify_theorem_m1(bound, _workers())
    elif args.suite == "gaps":
        ok, detail = _verify_gaps(max(bound, 2))
    else:
        ok, detail = _verify_golden(bound)
    result = {
        "suite": args.suite,
        "bound": bound,
        "detail": detail,
        "status": "PASS" if ok else "FAIL",
    }
    _emit(args, "verify", {"suite": args.suite, "max": bound}, [result])
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv",
                        help="output format (default: tsv)")

    parser = argparse.ArgumentParser(
        prog="lucaszeck",
        description="Non-consecutive partitions over the Lucas sequence and friends.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="partition an integer over a recurrence sequence")
    p.add_argument("n", type=int)
    p.add_argument("--seq", choices=("lucas", "fib", "custom"), default="lucas")
    p.add_argument("--params", help="custom recurrence as p,q,a0,a1 (all >= 1)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true",
                       help="every non-consecutive partition, not just the canonical one")
    group.add_argument("--canonical", action="store_true",
                       help="canonical partition only (default)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("zset", parents=[common],
                       help="integers whose canonical partition contains the k-th Lucas term")
    p.add_argument("k", type=int)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_zset)

    p = sub.add_parser("kset", parents=[common],
                       help="integers with two distinct non-consecutive Lucas partitions")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_kset)

    p = sub.add_parser("qseq", parents=[common],
                       help="integers whose canonical partition starts at the k-th Lucas term")
    p.add_argument("k", type=int)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_qseq)

    p = sub.add_parser("density", parents=[common],
                       help="count and proportion of non-uniquely partitioned integers")
    p.add_argument("--max", type=int, default=100)
    p.add_argument("--mode", choices=("formula", "enum", "both"), default="formula")
    p.add_argument("--table4", action="store_true",
                   help="recompute the bundled density table and compare exactly")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", parents=[common],
                       help="run one of the empirical verification suites")
    p.add_argument("--suite", required=True,
                   choices=("lemma3", "lemma5", "theorem-m1", "gaps", "golden"))
    p.add_argument("--max", type=int, default=None,
                   help="scan bound (suite-specific default)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SequenceOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
