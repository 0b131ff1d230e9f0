"""Command-line entry point.

Exit codes: 0 ok, 1 circuit not equivalent, 2 solver answer wrong,
64 bad usage, 65 precondition violated.
"""

from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .adaptive import solve_adjustable, solve_fixed
from .core import BitVector, circuit_fanin, majority
from .oracles import (
    AdversaryOracle,
    HonestOracle,
    QueryRejected,
    adversary_completions,
    adversary_is_ambiguous,
)
from .rng import SplitMix64
from .serialize import CircuitFormatError, circuit_from_json, iter_circuit_json
from .synth import (
    DEFAULT_VERIFY_LIMIT,
    VerificationRefused,
    boundary_edges,
    majority_table,
    synthesize,
    trivial_circuit,
    verify_exhaustive,
)

EXIT_MISMATCH = 1
EXIT_WRONG_ANSWER = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65

SOLVERS = {"fixed": solve_fixed, "adjustable": solve_adjustable}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _range(text: str) -> range:
    try:
        lo, _, hi = text.partition(":")
        lo = int(lo)
        hi = int(hi) if hi else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="majkit", description="Majority circuits and query algorithms")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("synth", help="build a depth-two circuit for MAJ_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trivial", action="store_true", help="fan-in n reference circuit")
    s.add_argument("--out", type=Path)

    v = sub.add_parser("verify", help="check a circuit against MAJ_n on all inputs")
    v.add_argument("--circuit", type=Path, required=True)
    v.add_argument("--limit", type=int, default=DEFAULT_VERIFY_LIMIT)

    so = sub.add_parser("solve", help="run a query algorithm once")
    so.add_argument("--model", choices=sorted(SOLVERS), required=True)
    so.add_argument("--n", type=int, required=True)
    so.add_argument("--k", type=int, required=True)
    src = so.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="BITSTRING")
    src.add_argument("--random", action="store_true")
    src.add_argument("--adversary", action="store_true")
    so.add_argument("--seed", type=int, default=0)
    so.add_argument("--trace", action="store_true")

    b = sub.add_parser("bench", help="worst-case query counts as CSV")
    b.add_argument("--model", choices=sorted(SOLVERS), required=True)
    b.add_argument("--n", type=_range, required=True, metavar="A:B")
    b.add_argument("--k", type=_range, required=True, metavar="C:D")
    mode = b.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out", type=Path, required=True)

    e = sub.add_parser("edges", help="boundary edges of MAJ_n")
    e.add_argument("--n", type=int, required=True)
    return p


def cmd_synth(args) -> int:
    c = trivial_circuit(args.n) if args.trivial else synthesize(args.n)
    summary = f"gates: {len(c.first_level)} fan-in: {circuit_fanin(c)}"
    if args.out:
        with open(args.out, "w") as fh:
            fh.writelines(iter_circuit_json(c))
            fh.write("\n")
        print(summary)
    else:
        # keep stdout pure JSON
        sys.stdout.writelines(iter_circuit_json(c))
        sys.stdout.write("\n")
        print(summary, file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    try:
        text = args.circuit.read_text()
    except OSError as exc:
        raise ValueError(f"cannot read circuit: {exc}") from None
    verdict = verify_exhaustive(circuit_from_json(text), args.limit)
    if verdict:
        print("equivalent")
        return 0
    print(f"counterexample: {verdict.counterexample}")
    return EXIT_MISMATCH


def _fmt_bound(bound) -> str:
    if bound is None:
        return ""
    if isinstance(bound, int):
        return str(bound)
    return f"{bound:.6f}"


def cmd_solve(args) -> int:
    n, k = args.n, args.k
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    solver = SOLVERS[args.model]
    x = None
    if args.adversary:
        oracle = AdversaryOracle(n, k)
    else:
        if args.input is not None:
            x = BitVector.from_string(args.input)
            if x.n != n:
                raise ValueError(f"--input has {x.n} bits, --n is {n}")
        else:
            x = SplitMix64(args.seed).bits(n)
        oracle = HonestOracle(x, k)
    report = solver(oracle, n, k, trace=args.trace)
    if x is not None:
        print(f"input: {x}")
    print(f"answer: {report.answer}")
    print(f"queries: {report.queries}")
    print(f"bound: {_fmt_bound(report.bound) or 'n/a'}")
    for line in report.trace or ():
        print(f"  {line}")
    if args.adversary:
        lo, hi = adversary_completions(oracle)
        print(f"completions: {lo} {hi}")
        print(f"ambiguous: {str(adversary_is_ambiguous(oracle)).lower()}")
        return 0
    if report.answer != majority(x):
        print(f"error: expected {majority(x)}", file=sys.stderr)
        return EXIT_WRONG_ANSWER
    return 0


def _bench_cell(cell):
    model, n, k, exhaustive, samples, seed = cell
    solver = SOLVERS[model]
    if exhaustive:
        inputs = (BitVector.from_int(v, n) for v in range(1 << n))
    else:
        rng = SplitMix64(seed ^ (n << 32) ^ k)
        inputs = (rng.bits(n) for _ in range(samples))
    worst, tested, bound = 0, 0, None
    for x in inputs:
        report = solver(HonestOracle(x, k, keep_log=False), n, k)
        if report.answer != majority(x):
            raise AssertionError(f"{model} solver wrong on n={n} k={k} x={x}")
        worst = max(worst, report.queries)
        bound = report.bound
        tested += 1
    return n, k, worst, bound, tested


def cmd_bench(args) -> int:
    exhaustive = args.exhaustive or args.samples is None
    samples = args.samples or 0
    if exhaustive and args.n.stop - 1 > DEFAULT_VERIFY_LIMIT:
        raise ValueError(f"exhaustive bench limited to n <= {DEFAULT_VERIFY_LIMIT}")
    if not exhaustive and samples < 1:
        raise ValueError("--samples must be positive")
    cells = [
        (args.model, n, k, exhaustive, samples, args.seed)
        for n in args.n
        for k in args.k
        if 1 <= k <= n
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_cell, cells))
    else:
        rows = [_bench_cell(c) for c in cells]
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "k", "max_queries", "bound", "inputs_tested"])
        for n, k, worst, bound, tested in rows:
            w.writerow([n, k, worst, _fmt_bound(bound), tested])
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_edges(args) -> int:
    if not 1 <= args.n <= 20:
        raise ValueError("edges supports 1 <= n <= 20")
    print(boundary_edges(majority_table(args.n), args.n))
    return 0


COMMANDS = {
    "synth": cmd_synth,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "bench": cmd_bench,
    "edges": cmd_edges,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, QueryRejected, CircuitFormatError, VerificationRefused) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATAERR


def run(argv=None) -> int:
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
