"""Command-line interface.

Exit codes: 0 success, 1 mathematical inconsistency or counterexample,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bench, verify
from .arith import ConsistencyError, DomainError, is_prime, rational
from .lemmas import gauss_sign_product, hermite_sum
from .symbols import jacobi, legendre_euler, legendre_gauss, symbol_consensus

METHODS = ("consensus", "euler", "gauss-sign", "m-sum", "mu-sum", "jacobi")

TSV_COLUMNS = ("a", "r", "eps", "a_prime", "floor_2qa", "floor_qa")


def _require_odd_prime(n: int) -> None:
    if n == 2 or not is_prime(n):
        raise DomainError(f"{n} is not an odd prime")


def cmd_symbol(args) -> int:
    a, n, method = args.a, args.n, args.method
    if method == "jacobi":
        value = jacobi(a, n)
    else:
        _require_odd_prime(n)
        if method == "euler":
            value = legendre_euler(a, n)
        elif method == "consensus":
            value = symbol_consensus(a, n)
        else:
            variant = "sign-product" if method == "gauss-sign" else method
            value = legendre_gauss(a, n, variant)
    print(value)
    return 0


def format_trace(trace, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(trace.as_dict())
    lines = ["\t".join(TSV_COLUMNS)]
    for row in trace.rows:
        lines.append("\t".join(str(getattr(row, c)) for c in TSV_COLUMNS))
    lines += [f"# M\t{trace.M}", f"# mu\t{trace.mu}", f"# symbol\t{trace.symbol}"]
    return "\n".join(lines)


def cmd_trace(args) -> int:
    _require_odd_prime(args.p)
    trace = gauss_sign_product(args.q, args.p).check()
    print(format_trace(trace, args.format))
    return 0


def cmd_verify(args) -> int:
    reports = verify.run_verification(args.max_prime, args.lemma, args.workers)
    status = 0
    for report in reports:
        print(report.line())
        if report.first_counterexample is not None:
            status = 1
            p, q, detail = report.first_counterexample
            print(f"counterexample {report.lemma} ({p}, {q}): {detail}")
            if report.lemma != "hermite":
                try:
                    print(format_trace(gauss_sign_product(q, p), "json"))
                except (DomainError, ConsistencyError) as exc:
                    print(f"trace unavailable: {exc}", file=sys.stderr)
    return status


def cmd_hermite(args) -> int:
    x = rational(args.x)
    if x < 0:
        raise DomainError("x must be >= 0")
    lhs = hermite_sum(x, args.n)
    rhs = (args.n * x.numerator) // x.denominator
    ok = lhs == rhs
    print(lhs, rhs, "OK" if ok else "FAIL")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    result = bench.run_bench(args.bits, args.samples, args.seed)
    print(f"# bits={result.bits} samples={result.samples} seed={args.seed}")
    print(result.table())
    return 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reciprocity",
        description="Legendre/Jacobi symbols and executable checks of the "
        "Gauss-lemma proof of quadratic reciprocity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("symbol", help="compute (a/n)")
    p.add_argument("a", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=METHODS, default="consensus")
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("trace", help="per-element Gauss lemma trace for (q/p)")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="exhaustive lemma sweeps over prime pairs")
    p.add_argument("--max-prime", type=int, default=100)
    p.add_argument("--lemma", choices=verify.LEMMAS + ("all",), default="all")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hermite", help="check Hermite's identity at x = u/v")
    p.add_argument("x", help="rational as u/v")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_hermite)

    p = sub.add_parser("bench", help="time jacobi against legendre_euler")
    p.add_argument("--bits", type=int, choices=bench.WIDTHS, default=63)
    p.add_argument("--samples", type=_positive_int, default=1000)
    p.add_argument("--seed", type=int, default=bench.DEFAULT_SEED)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
