"""Command-line interface.

Subcommands: linearize, expand, partitions, verify.  Output is deterministic:
identical invocations produce identical bytes (JSON carries an optional
timing field, suppressed with --no-timing).

Exit status: 0 success / all checks pass, 1 verification failure,
2 usage error, 3 internal identity violation (method mismatch or a division
that should have been exact).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import ExactPoly, InexactDivisionError
from .cumulants import weighted_cumulant_product
from .families import UnknownFamilyError, family_spec
from .linearize import (
    VERIFY_SUITES,
    expansion_coefficients,
    linearize_oracle,
    linearize_partition_sum,
    verify_suite,
)
from .partitions import (
    Composition,
    SizeLimitError,
    compute_stats,
    enumerate_inhomogeneous,
    rgs_prefixes,
)

USAGE_ERROR = 2
IDENTITY_ERROR = 3


class _UsageError(Exception):
    pass


def _parse_degrees(text: str) -> Composition:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise _UsageError(f"malformed degree list {text!r}; expected e.g. 2,2") from None
    try:
        return Composition(parts)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _parse_eval(text: str) -> dict[str, Fraction]:
    bindings: dict[str, Fraction] = {}
    for piece in text.split(","):
        if not piece:
            continue
        if "=" not in piece:
            raise _UsageError(f"malformed --eval entry {piece!r}; expected name=value")
        name, _, raw = piece.partition("=")
        name = name.strip()
        if name not in ("t", "q", "alpha"):
            raise _UsageError(f"unknown --eval variable {name!r}; expected t, q or alpha")
        try:
            bindings[name] = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise _UsageError(f"malformed --eval value {raw!r}; expected a rational like 3 or 1/2") from None
    if not bindings:
        raise _UsageError("--eval given but empty")
    return bindings


def poly_to_json_terms(p: ExactPoly) -> list[dict]:
    """JSON term encoding: one object per term in descending graded-lex order,
    numerator/denominator as decimal strings so nothing overflows."""
    out = []
    for (et, eq, ea), coeff in p.terms():
        frac = Fraction(coeff)
        out.append(
            {
                "t": et,
                "q": eq,
                "alpha": ea,
                "num": str(frac.numerator),
                "den": str(frac.denominator),
            }
        )
    return out


def poly_from_json_terms(terms: list[dict]) -> ExactPoly:
    acc: dict[tuple[int, int, int], Fraction] = {}
    for term in terms:
        key = (int(term["t"]), int(term["q"]), int(term["alpha"]))
        acc[key] = acc.get(key, Fraction(0)) + Fraction(int(term["num"]), int(term["den"]))
    return ExactPoly(acc)


def _family(name: str):
    try:
        return family_spec(name)
    except UnknownFamilyError as exc:
        raise _UsageError(str(exc)) from None


def _threaded_partition_sum(f, c: Composition, threads: int, cap) -> ExactPoly:
    """Split the enumeration stream by restricted-growth prefixes and reduce
    the partial sums; ordering of the reduction never changes the result."""
    prefixes = rgs_prefixes(c.n, 2)

    def partial(prefix):
        return ExactPoly.sum(
            weighted_cumulant_product(f, p)
            for p in enumerate_inhomogeneous(c, "all", cap=cap, prefix=prefix)
        )

    if c.n == 0:
        return ExactPoly.one()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return ExactPoly.sum(pool.map(partial, prefixes))


def cmd_linearize(args) -> int:
    f = _family(args.family)
    c = _parse_degrees(args.degrees)
    bindings = _parse_eval(args.eval) if args.eval else None
    started = time.perf_counter()
    values: dict[str, ExactPoly] = {}
    if args.method in ("partition", "both"):
        if args.threads > 1:
            values["partition"] = _threaded_partition_sum(f, c, args.threads, args.cap)
        else:
            values["partition"] = linearize_partition_sum(f, c, cap=args.cap)
    if args.method in ("oracle", "both"):
        values["oracle"] = linearize_oracle(f, c, cap=args.cap)
    elapsed_ms = (time.perf_counter() - started) * 1000.0

    match = None
    if args.method == "both":
        match = values["partition"] == values["oracle"]

    shown = {k: (v.substitute(bindings) if bindings else v) for k, v in values.items()}

    if args.format == "json":
        record = {
            "command": "linearize",
            "family": f.name,
            "composition": list(c.parts),
            "results": [
                {"method": k, "terms": poly_to_json_terms(v)} for k, v in shown.items()
            ],
        }
        if match is not None:
            record["match"] = match
        if not args.no_timing:
            record["timing_ms"] = round(elapsed_ms, 3)
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "degrees", "method", "value"])
        for k, v in shown.items():
            writer.writerow([f.name, str(c), k, v.to_text()])
        sys.stdout.write(buf.getvalue())
    else:
        if args.method == "both":
            print(f"partition: {shown['partition'].to_text()}")
            print(f"oracle:    {shown['oracle'].to_text()}")
            print(f"match:     {'yes' if match else 'NO'}")
        else:
            print(next(iter(shown.values())).to_text())

    if match is False:
        return IDENTITY_ERROR
    return 0


def cmd_expand(args) -> int:
    f = _family(args.family)
    c = _parse_degrees(args.degrees)
    bindings = _parse_eval(args.eval) if args.eval else None
    started = time.perf_counter()
    try:
        expansion = expansion_coefficients(f, c, cap=args.cap)
    except InexactDivisionError as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return IDENTITY_ERROR
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    coeffs = [
        coeff.substitute(bindings) if bindings else coeff for coeff in expansion.coeffs
    ]

    if args.format == "json":
        record = {
            "command": "expand",
            "family": f.name,
            "composition": list(c.parts),
            "coefficients": [poly_to_json_terms(coeff) for coeff in coeffs],
        }
        if not args.no_timing:
            record["timing_ms"] = round(elapsed_ms, 3)
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "degrees", "index", "coefficient"])
        for m, coeff in enumerate(coeffs):
            writer.writerow([f.name, str(c), m, coeff.to_text()])
        sys.stdout.write(buf.getvalue())
    else:
        for m, coeff in enumerate(coeffs):
            print(f"P_{m}: {coeff.to_text()}")
    return 0


def cmd_partitions(args) -> int:
    c = _parse_degrees(args.composition)
    for p in enumerate_inhomogeneous(c, args.filter, cap=args.cap):
        line = str(p)
        if args.stats:
            st = compute_stats(p)
            line += (
                f"  blocks={st.block_count} singletons={st.singletons}"
                f" pairs={st.pair_blocks} rc={st.restricted_crossings}"
                f" sd={st.singleton_depth} outer={st.outer} inner={st.inner}"
                f" inner_singletons={st.inner_singletons}"
                f" noncrossing={'yes' if st.noncrossing else 'no'}"
            )
        print(line)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in VERIFY_SUITES:
        raise _UsageError(f"unknown suite {args.suite!r}; known: {', '.join(VERIFY_SUITES)}")
    report = verify_suite(args.suite, args.max_n, cap=args.cap)
    for line in report.summary_lines():
        print(line)
    return 0 if report.passed else 1


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on its own errors, which matches the usage-error status
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="linco",
        description=(
            "Exact linearization coefficients for orthogonal polynomial families "
            "via crossing-weighted set-partition sums."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_eval=True):
        if with_eval:
            p.add_argument("--eval", help="evaluate variables, e.g. q=1,t=1/2,alpha=0")
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="text", help="output format"
        )
        p.add_argument(
            "--no-timing", action="store_true", help="omit the timing field from JSON output"
        )

    p_lin = sub.add_parser("linearize", help="expected value of a product of family polynomials")
    p_lin.add_argument("--family", required=True)
    p_lin.add_argument("--degrees", required=True, help="comma-separated degrees, e.g. 2,2")
    p_lin.add_argument(
        "--method", choices=("partition", "oracle", "both"), default="partition"
    )
    p_lin.add_argument("--threads", type=int, default=1, help="parallel stream reduction")
    add_common(p_lin)
    p_lin.set_defaults(func=cmd_linearize)

    p_exp = sub.add_parser("expand", help="expand a product over the family basis")
    p_exp.add_argument("--family", required=True)
    p_exp.add_argument("--degrees", required=True)
    add_common(p_exp)
    p_exp.set_defaults(func=cmd_expand)

    p_part = sub.add_parser("partitions", help="list filtered inhomogeneous partitions")
    p_part.add_argument("--composition", required=True, help="comma-separated group sizes")
    p_part.add_argument("--filter", default="all")
    p_part.add_argument("--stats", action="store_true", help="append the nine statistics")
    p_part.set_defaults(func=cmd_partitions)

    p_ver = sub.add_parser("verify", help="run a named identity suite")
    p_ver.add_argument("--suite", required=True)
    p_ver.add_argument("--max-n", type=int, default=6, dest="max_n")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    # the enumeration cap is configured through the environment, not a flag
    args.cap = None
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except InexactDivisionError as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return IDENTITY_ERROR


if __name__ == "__main__":
    sys.exit(main())
