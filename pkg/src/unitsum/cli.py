"""Command-line surface: the ``unity`` tool.

Subcommands: table, verify, decompose, oracle.  All results go to stdout,
diagnostics (including per-route timings) to stderr, so identical
invocations produce byte-identical stdout.  Exit codes: 0 success,
2 mathematical disagreement, 3 usage or range error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import identity, permutations, series
from .partitions import UnsupportedRangeError, enumerate_cycle_types

EXIT_OK = 0
EXIT_DISAGREEMENT = 2
EXIT_USAGE = 3

ROUTE_ORDER = ("direct", "poly", "perm")


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for math."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunReport:
    n: int
    routes: tuple[str, ...]
    results: dict[str, str]
    verdict: str
    elapsed_ms: dict[str, float] = field(default_factory=dict)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="unity",
        description="Write 1 as a sum of unit fractions indexed by cycle types, "
        "and verify the identity through independent routes.",
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=80,
        metavar="N",
        help="upper bound on accepted weights (default 80)",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("n", type=int, help="weight")
        cmd.add_argument(
            "--format", choices=("text", "csv", "json"), default="text"
        )
        return cmd

    add("table", "cycle types of weight n with their denominators")

    verify = add("verify", "check that the reciprocal denominators sum to 1")
    verify.add_argument("--threads", type=int, default=1)

    decompose = add("decompose", "denominators of a unit-fraction decomposition of 1")
    decompose.add_argument(
        "--sorted", dest="sorted_flag", action="store_true",
        help="sort denominators ascending instead of enumeration order",
    )

    oracle = add("oracle", "cross-check independent verification routes")
    oracle.add_argument(
        "--routes",
        default="direct,poly,perm",
        help="comma-separated subset of direct,poly,perm (default all)",
    )
    oracle.add_argument("--threads", type=int, default=1)
    return parser


def _print(text: str) -> None:
    sys.stdout.write(text + "\n")


def _json(payload) -> str:
    return json.dumps(payload, separators=(",", ":"))


def _frac(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def cmd_table(n: int, fmt: str, max_n: int) -> int:
    rows = identity.render_table(n, max_n)
    if fmt == "text":
        for row in rows:
            _print(" ".join(map(str, row.alpha.dense())) + f" {row.denominator}")
    elif fmt == "csv":
        _print(",".join(f"alpha_{j}" for j in range(1, n + 1)) + ",denominator")
        for row in rows:
            _print(",".join(map(str, row.alpha.dense())) + f",{row.denominator}")
    else:
        _print(_json({
            "n": n,
            "rows": [
                {"alpha": list(row.alpha.dense()), "denominator": str(row.denominator)}
                for row in rows
            ],
        }))
    return EXIT_OK


def cmd_verify(n: int, fmt: str, max_n: int, threads: int) -> int:
    start = time.perf_counter()
    total = identity.reciprocal_sum(n, max_n, threads)
    elapsed = (time.perf_counter() - start) * 1000.0
    verdict = "pass" if total == 1 else "fail"
    report = RunReport(
        n, ("direct",), {"direct": _frac(total)}, verdict, {"direct": elapsed}
    )
    print(f"unity: route direct took {elapsed:.1f} ms", file=sys.stderr)
    if fmt == "text":
        _print(f"n={n} sum={report.results['direct']} verdict={verdict}")
    elif fmt == "csv":
        _print("n,routes,sum,verdict")
        _print(f"{n},direct,{report.results['direct']},{verdict}")
    else:
        _print(_json({
            "n": n,
            "routes": ["direct"],
            "sum": report.results["direct"],
            "verdict": verdict,
        }))
    return EXIT_OK if verdict == "pass" else EXIT_DISAGREEMENT


def cmd_decompose(n: int, fmt: str, max_n: int, sorted_flag: bool) -> int:
    denominators = identity.unit_fraction_decomposition(n, max_n)
    if sorted_flag:
        denominators.sort()
    if fmt == "text":
        _print(" ".join(map(str, denominators)))
    elif fmt == "csv":
        _print("denominator")
        for d in denominators:
            _print(str(d))
    else:
        _print(_json({"n": n, "denominators": [str(d) for d in denominators]}))
    return EXIT_OK


def _run_perm_route(n: int) -> tuple[str, bool]:
    """Compare the permutation census against n!/D(alpha), pointwise."""
    observed = {
        alpha.dense(): count for alpha, count in permutations.census(n).items()
    }
    for alpha in enumerate_cycle_types(n):
        expected = identity.cycle_count(n, alpha)
        got = observed.pop(alpha.dense(), None)
        if got != expected:
            print(
                f"unity: perm census mismatch at alpha={alpha.dense()}: "
                f"census={got} expected={expected}",
                file=sys.stderr,
            )
            return "mismatch", False
    if observed:
        extra = sorted(observed)[0]
        print(f"unity: perm census has spurious cycle type {extra}", file=sys.stderr)
        return "mismatch", False
    return "match", True


def cmd_oracle(n: int, fmt: str, max_n: int, routes_arg: str, threads: int) -> int:
    requested = [r.strip() for r in routes_arg.split(",") if r.strip()]
    unknown = [r for r in requested if r not in ROUTE_ORDER]
    if unknown or not requested:
        print(f"unity: error: unknown routes {unknown or routes_arg!r}", file=sys.stderr)
        return EXIT_USAGE
    routes = tuple(r for r in ROUTE_ORDER if r in requested)
    if "perm" in routes and n > permutations.ORACLE_MAX_N:
        print(
            f"unity: error: perm route supports n <= {permutations.ORACLE_MAX_N}, "
            f"got n={n}",
            file=sys.stderr,
        )
        return EXIT_USAGE

    results: dict[str, str] = {}
    elapsed_ms: dict[str, float] = {}
    all_ok = True
    for route in routes:
        start = time.perf_counter()
        if route == "direct":
            total = identity.reciprocal_sum(n, max_n, threads)
            results[route] = _frac(total)
            ok = total == 1
        elif route == "poly":
            coeff = series.coefficient(
                series.power_truncated(series.base_polynomial(n), n, n), n
            )
            results[route] = _frac(coeff)
            ok = coeff == 1
        else:
            results[route], ok = _run_perm_route(n)
        elapsed_ms[route] = (time.perf_counter() - start) * 1000.0
        print(f"unity: route {route} took {elapsed_ms[route]:.1f} ms", file=sys.stderr)
        all_ok = all_ok and ok

    verdict = "pass" if all_ok else "fail"
    report = RunReport(n, routes, results, verdict, elapsed_ms)
    if fmt == "text":
        for route in report.routes:
            _print(f"n={n} route={route} result={report.results[route]}")
        _print(f"n={n} verdict={verdict}")
    elif fmt == "csv":
        _print("n,route,result,verdict")
        for route in report.routes:
            _print(f"{n},{route},{report.results[route]},{verdict}")
    else:
        _print(_json({
            "n": n,
            "routes": list(report.routes),
            "results": {route: report.results[route] for route in report.routes},
            "verdict": verdict,
        }))
    return EXIT_OK if all_ok else EXIT_DISAGREEMENT


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "table":
            return cmd_table(args.n, args.format, args.max_n)
        if args.command == "verify":
            return cmd_verify(args.n, args.format, args.max_n, args.threads)
        if args.command == "decompose":
            return cmd_decompose(args.n, args.format, args.max_n, args.sorted_flag)
        return cmd_oracle(args.n, args.format, args.max_n, args.routes, args.threads)
    except UnsupportedRangeError as exc:
        print(f"unity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
