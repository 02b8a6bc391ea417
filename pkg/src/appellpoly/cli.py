"""Batch command-line front end.

Subcommands: `table` (Stirling triangles and iid-sum moment tables),
`coeffs` and `poly` (family constants and polynomials), and `verify` (the
identity-check suites).  All values are exact rationals rendered as "p/q";
floating point appears only when --eval receives a decimal argument or
--float is passed.  Identical invocations produce byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 unreadable
or malformed input file, 4 parameter outside its mathematical domain.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .combinatorics import format_rational, parse_rational
from .errors import DomainError, MomentFileError
from .families import parse_family
from .moments import (
    MomentSequence,
    load_custom_moments,
    make_named,
    sum_moment_table,
)
from .sequences import build_polynomials
from .stirling import stirling_table
from .verification import SUITES, render_report_text, report_document, run_suite

DEFAULT_N = 20
DEFAULT_CAP = 64

_ORDER_NOTE = (
    'The "order t" of a sequence is the exponent in (E e^{zY})^(-t): '
    "classical Bernoulli numbers are bernoulli-order:1 on the uniform law. "
    'Rational flags use "p/q" with no spaces; a decimal --eval argument '
    "switches that evaluation (and only it) to floating point."
)


def _resolve_cap() -> int:
    raw = os.environ.get("APPELL_MAX_N")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"APPELL_MAX_N must be an integer, got {raw!r}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"--n must be >= 0, got {n}")
    cap = _resolve_cap()
    if n > cap:
        raise ValueError(
            f"--n {n} exceeds the cap of {cap}; exact-arithmetic cost grows "
            f"quickly with n (set APPELL_MAX_N to raise the cap)"
        )
    if n > DEFAULT_CAP:
        print(
            f"warning: n={n} is above {DEFAULT_CAP}; exact arithmetic at this "
            f"order may be slow",
            file=sys.stderr,
        )


def parse_distribution(selector: str, order: int) -> MomentSequence:
    """Build a moment sequence from a selector like "beta:3" or "custom:path"."""
    kind, sep, rest = selector.partition(":")
    if kind == "custom":
        if not rest:
            raise ValueError("custom needs a path: custom:<path>")
        return load_custom_moments(rest, min_order=order)
    if kind in ("point-mass-one", "uniform01"):
        if sep:
            raise ValueError(f"{kind} takes no parameter")
        return make_named(kind, order)
    if kind == "beta":
        if not rest:
            raise ValueError("beta needs a shape: beta:<m>")
        m = parse_rational(rest)
        if m.denominator != 1:
            raise DomainError(f"beta shape must be an integer, got {m}")
        return make_named("beta", order, int(m))
    if kind in ("bernoulli", "bernoulli-times-uniform"):
        if not rest:
            raise ValueError(f"{kind} needs a probability: {kind}:<p/q>")
        return make_named(kind, order, parse_rational(rest))
    raise ValueError(
        f"unknown distribution {kind!r}; known: point-mass-one, uniform01, "
        f"beta:<m>, bernoulli:<p/q>, bernoulli-times-uniform:<p/q>, custom:<path>"
    )


def _dump_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _dump_csv(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_table(args: argparse.Namespace) -> int:
    _check_n(args.n)
    mu = parse_distribution(args.distribution, args.n)
    if args.kind == "stirling":
        table = stirling_table(mu, args.n)
        rows = [
            [format_rational(table.value(n, m)) for m in range(n + 1)]
            for n in range(args.n + 1)
        ]
        route = table.source
        csv_header = ["n", "m", "value"]
    else:
        table = sum_moment_table(mu, args.n)
        rows = [
            [format_rational(table.value(k, n)) for n in range(args.n + 1)]
            for k in range(args.n + 1)
        ]
        route = "convolution-recurrence"
        csv_header = ["k", "n", "value"]
    document = {
        "command": "table",
        "kind": args.kind,
        "distribution": args.distribution,
        "n": args.n,
        "route": route,
        "rows": rows,
    }
    if args.format == "json":
        _emit(_dump_json(document), args.out)
    elif args.format == "csv":
        flat = [
            [str(i), str(j), value]
            for i, row in enumerate(rows)
            for j, value in enumerate(row)
        ]
        _emit(_dump_csv(csv_header, flat), args.out)
    else:
        lines = [
            f"# table: {args.kind}",
            f"# distribution: {args.distribution}",
            f"# n: {args.n}",
            f"# route: {route}",
        ]
        lines.extend(f"{i}: {' '.join(row)}" for i, row in enumerate(rows))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _parse_eval(text: str, as_float: bool):
    """Classify --eval input: ("exact", Fraction) or ("float", float)."""
    try:
        x = parse_rational(text)
    except ValueError:
        try:
            value = float(text)
        except ValueError:
            raise ValueError(
                f'--eval expects "p/q" or a decimal, got {text!r}'
            ) from None
        return "float", value
    if as_float:
        return "float", float(x)
    return "exact", x


def _family_document(args: argparse.Namespace):
    _check_n(args.n)
    if args.as_float and args.eval is None:
        raise ValueError("--float only applies to --eval")
    spec = parse_family(args.family)
    constants = spec.closed_form_constants(args.n)
    polys = build_polynomials(constants, args.n)
    eval_doc = None
    if args.eval is not None:
        mode, x = _parse_eval(args.eval, args.as_float)
        top = polys[args.n]
        if mode == "exact":
            eval_doc = {
                "mode": "exact",
                "x": format_rational(x),
                "value": format_rational(top.evaluate(x)),
            }
        else:
            eval_doc = {"mode": "float", "x": x, "value": top.evaluate_float(x)}
    return spec, constants, polys, eval_doc


def _eval_text_line(n: int, eval_doc: dict) -> str:
    return f"A_{n}({eval_doc['x']}) = {eval_doc['value']}"


def _eval_csv_row(eval_doc: dict) -> list[str]:
    return [f"eval@{eval_doc['x']}", str(eval_doc["value"])]


def cmd_coeffs(args: argparse.Namespace) -> int:
    spec, constants, polys, eval_doc = _family_document(args)
    values = [format_rational(c) for c in constants]
    if args.format == "json":
        document = {
            "command": "coeffs",
            "family": args.family,
            "n": args.n,
            "constants": values,
        }
        if eval_doc is not None:
            document["eval"] = eval_doc
        _emit(_dump_json(document), args.out)
    elif args.format == "csv":
        rows = [[str(n), v] for n, v in enumerate(values)]
        if eval_doc is not None:
            rows.append(_eval_csv_row(eval_doc))
        _emit(_dump_csv(["n", "value"], rows), args.out)
    else:
        lines = [f"# coeffs: {args.family}", f"# n: {args.n}"]
        lines.extend(f"{n}: {v}" for n, v in enumerate(values))
        if eval_doc is not None:
            lines.append(_eval_text_line(args.n, eval_doc))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    spec, constants, polys, eval_doc = _family_document(args)
    top = polys[args.n]
    coefficients = [format_rational(top.coefficient(i)) for i in range(args.n + 1)]
    if args.format == "json":
        document = {
            "command": "poly",
            "family": args.family,
            "n": args.n,
            "coefficients": coefficients,
            "rendered": top.render(),
        }
        if eval_doc is not None:
            document["eval"] = eval_doc
        _emit(_dump_json(document), args.out)
    elif args.format == "csv":
        rows = [[str(i), c] for i, c in enumerate(coefficients)]
        if eval_doc is not None:
            rows.append(_eval_csv_row(eval_doc))
        _emit(_dump_csv(["power", "coefficient"], rows), args.out)
    else:
        lines = [f"# poly: {args.family}", f"# n: {args.n}", top.render()]
        if eval_doc is not None:
            lines.append(_eval_text_line(args.n, eval_doc))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    _check_n(args.n)
    extra: tuple[MomentSequence, ...] = ()
    if args.distribution is not None:
        extra = (parse_distribution(args.distribution, args.n),)
    results = run_suite(args.suite, args.n, extra=extra)
    if args.format == "json":
        _emit(_dump_json(report_document(args.suite, args.n, results)), args.out)
    else:
        _emit(render_report_text(args.suite, args.n, results), args.out)
    return 0 if all(r.passed for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="appellpoly",
        description=(
            "Exact Appell polynomial sequences driven by moment data, with "
            "probabilistic Stirling numbers and identity verification."
        ),
        epilog=_ORDER_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser(
        "table",
        help="emit a Stirling triangle or iid-sum moment table",
        epilog=_ORDER_NOTE,
    )
    table.add_argument("kind", choices=["stirling", "sum-moments"])
    table.add_argument("--n", type=int, default=DEFAULT_N)
    table.add_argument(
        "--distribution",
        required=True,
        help=(
            "point-mass-one | uniform01 | beta:<m> | bernoulli:<p/q> | "
            "bernoulli-times-uniform:<p/q> | custom:<path>"
        ),
    )
    table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    table.add_argument("--out", help="write the document to a file")
    table.set_defaults(handler=cmd_table)

    for name, handler, description in (
        ("coeffs", cmd_coeffs, "emit family constants A_0(0)..A_n(0)"),
        ("poly", cmd_poly, "emit the degree-n family polynomial"),
    ):
        command = sub.add_parser(name, help=description, epilog=_ORDER_NOTE)
        command.add_argument(
            "--family",
            required=True,
            help=(
                "classical-bernoulli | classical-euler | gen-bernoulli:<t>,<m> | "
                "bernoulli-order:<t> | apostol-euler:<t>,<beta> | bstar:<t>,<beta>"
            ),
        )
        command.add_argument("--n", type=int, default=DEFAULT_N)
        command.add_argument(
            "--eval",
            help='evaluate A_n there: "p/q" stays exact, a decimal uses floats',
        )
        command.add_argument(
            "--float",
            action="store_true",
            dest="as_float",
            help="force float evaluation of --eval",
        )
        command.add_argument(
            "--format", choices=["text", "csv", "json"], default="text"
        )
        command.add_argument("--out", help="write the document to a file")
        command.set_defaults(handler=handler)

    verify = sub.add_parser(
        "verify",
        help="run identity-check suites; exit 0 only if every check passes",
        epilog=_ORDER_NOTE,
    )
    verify.add_argument("--suite", choices=list(SUITES), default="all")
    verify.add_argument("--n", type=int, default=DEFAULT_N)
    verify.add_argument(
        "--distribution",
        help="extra distribution to include in the route-equality checks",
    )
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--out", help="write the report to a file")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except MomentFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
