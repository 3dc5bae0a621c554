"""Command-line entry point: ``python -m perimeter <subcommand> ...``.

Subcommands ``enumerate``, ``map``, ``count``, ``series`` and ``verify``
share the flags ``--format {text,json,csv}`` and ``--output PATH``.
JSON output has the shape ``{"command", "params", <payload>}`` where the
payload is ``rows``, ``series`` or ``report``.  Integers in the payload
are written as decimal strings so that no consumer rounds them.

Exit status is 0 on success, 1 when a verification fails and 2 on a
usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional

from . import bijections, counting, series, verify
from .enumeration import FAMILIES, EnumerationRequest, run_request
from .errors import DomainError
from .partitions import (
    BoundarySequence,
    LabeledPartition,
    format_labeled,
    format_partition,
    from_bits,
    parse_labeled,
    parse_partition,
    to_bits,
)

FORMATS = ("text", "json", "csv")
COUNTS = ("A", "B", "C", "h", "a-odd", "a-even", "sum-dif", "fib")
SERIES = ("rep-even", "dist-even-xy", "mod", "dif", "sum-mod", "sum-dif", "delta")
MAPS = ("phi", "phi-inverse", "xi")
VERIFY_THEOREMS = verify.THEOREMS + ("xi-literal",)


@dataclass
class OutputConfig:
    format: str = "text"
    destination: Optional[str] = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise DomainError(f"unknown format {self.format!r}")

    def write(self, text: str) -> None:
        if self.destination is None:
            sys.stdout.write(text)
        else:
            with open(self.destination, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)


# -- serialization -----------------------------------------------------------------


def _stringify(value):
    """Integers become decimal strings, recursively; ``params`` mappings are
    left alone because they only hold the small values the user typed."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {
            k: (v if k == "params" else _stringify(v)) for k, v in value.items()
        }
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return str(value) if not isinstance(value, (str, float)) else value


def _json(command: str, params: dict, key: str, payload) -> str:
    doc = {"command": command, "params": params, key: _stringify(payload)}
    return json.dumps(doc, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(v) for v in row])
    return buf.getvalue()


def _params(args, *names) -> dict:
    return {n: getattr(args, n.replace("-", "_")) for n in names
            if getattr(args, n.replace("-", "_")) is not None}


# -- enumerate ------------------------------------------------------------------


def _format_item(item) -> str:
    if isinstance(item, LabeledPartition):
        return format_labeled(item)
    return format_partition(item)


def cmd_enumerate(args, out: OutputConfig) -> int:
    req = EnumerationRequest(args.family, args.n, d=args.d, k=args.k)
    items = [_format_item(x) for x in run_request(req)]
    params = _params(args, "family", "n", "d", "k")
    if out.format == "json":
        out.write(_json("enumerate", params, "rows", items))
    elif out.format == "csv":
        out.write(_csv(["index", "object"], enumerate(items)))
    else:
        out.write("".join(item + "\n" for item in items))
    return 0


# -- map --------------------------------------------------------------------------

_BITS = re.compile(r"0[01]*")


def _parse_map_input(text: str):
    """Return ``("bits", word)``, ``("partition", lam)`` or ``("labeled", lp)``.

    Labeled partitions are written ``4,3*,1``; ``4,3,1:2`` (star position
    after a colon) is accepted as well.
    """
    text = text.strip()
    if _BITS.fullmatch(text):
        return "bits", BoundarySequence(text)
    if ":" in text:
        parts, _, star = text.partition(":")
        try:
            pos = int(star)
        except ValueError:
            raise DomainError(f"bad star position in {text!r}") from None
        return "labeled", LabeledPartition.make(parse_partition(parts), pos)
    if "*" in text:
        return "labeled", parse_labeled(text)
    return "partition", parse_partition(text)


def cmd_map_apply(args, out: OutputConfig) -> int:
    kind, value = _parse_map_input(args.input)
    if args.map == "xi":
        if kind != "labeled":
            raise DomainError("xi acts on labeled partitions such as 4,3*,1")
        result = format_labeled(bijections.xi(value, args.d))
    else:
        if kind == "labeled":
            raise DomainError(f"{args.map} acts on boundary words or partitions")
        fn = bijections.phi_d if args.map == "phi" else bijections.phi_d_inverse
        word = value if kind == "bits" else to_bits(value)
        image = fn(word, args.d)
        result = str(image) if kind == "bits" else format_partition(from_bits(image))
    params = {"map": args.map, "d": args.d, "input": args.input}
    if out.format == "json":
        out.write(_json("map apply", params, "rows", [result]))
    elif out.format == "csv":
        out.write(_csv(["input", "output"], [(args.input, result)]))
    else:
        out.write(result + "\n")
    return 0


def cmd_map_orbit(args, out: OutputConfig) -> int:
    kind, value = _parse_map_input(args.input)
    if kind == "labeled":
        raise DomainError("orbits are taken of boundary words or partitions")
    word = value if kind == "bits" else to_bits(value)
    report = bijections.orbit(word, args.d)
    cycle = [str(w) if kind == "bits" else format_partition(from_bits(w)) for w in report.cycle]
    params = {"d": args.d, "input": args.input}
    if out.format == "json":
        out.write(_json("map orbit", params, "rows", cycle))
    elif out.format == "csv":
        out.write(_csv(["step", "object"], enumerate(cycle)))
    else:
        out.write(f"orbit length {report.length}\n" + "".join(c + "\n" for c in cycle))
    return 0


# -- count ------------------------------------------------------------------------


def _count_rows(what: str, n: int, d: Optional[int]):
    """Header and rows for one count request."""
    if what in ("A", "B", "C"):
        table = {"A": counting.table_A, "B": counting.table_B, "C": counting.table_C}[what](n)
        return ["n", "k", "count"], [(n, k, v) for k, v in sorted(table.values.items())]
    if what == "h":
        poly = counting.h_poly(n)
        return ["n", "k", "count"], [(n, k, c) for k, c in enumerate(poly)]
    if what == "sum-dif":
        if d is None:
            raise DomainError("sum-dif needs --d")
        return ["n", "d", "count"], [(n, d, counting.sum_dif(n, d))]
    fn = {"a-odd": counting.a_odd, "a-even": counting.a_even, "fib": counting.fibonacci}[what]
    return ["n", "count"], [(n, fn(n))]


def cmd_count(args, out: OutputConfig) -> int:
    header, rows = _count_rows(args.what, args.n, args.d)
    params = _params(args, "what", "n", "d")
    if out.format == "json":
        records = [dict(zip(header, row)) for row in rows]
        out.write(_json("count", params, "rows", records))
    elif out.format == "csv":
        out.write(_csv(header, rows))
    else:
        out.write("".join(" ".join(str(v) for v in row) + "\n" for row in rows))
    return 0


# -- series -----------------------------------------------------------------------

_NEEDS_D = ("mod", "dif", "sum-mod", "sum-dif", "delta")
_TAKES_Y = ("mod", "dif", "dist-even-xy")


def _build_series(name, d, order, order_y):
    if name in _NEEDS_D and d is None:
        raise DomainError(f"series {name!r} needs --d")
    if name not in _NEEDS_D and d is not None:
        raise DomainError(f"series {name!r} takes no --d")
    if order_y is not None and name not in _TAKES_Y:
        raise DomainError(f"series {name!r} is univariate; drop --order-y")
    if name == "rep-even":
        return series.gf_rep_even(order)
    if name == "dist-even-xy":
        return series.gf_dist_even_bivariate(order, order if order_y is None else order_y)
    if name == "mod":
        return series.gf_mod(d, order, order_y)
    if name == "dif":
        return series.gf_dif(d, order, order_y)
    if name == "sum-mod":
        return series.sum_series_mod(d, order)
    if name == "sum-dif":
        return series.sum_series_dif(d, order)
    return series.delta_series(d, order)


def _coefficient_text(c) -> str:
    return str(c.constant()) if c.is_constant() else str(c)


def cmd_series(args, out: OutputConfig) -> int:
    if args.order < 0:
        raise DomainError("order must be nonnegative")
    s = _build_series(args.name, args.d, args.order, args.order_y)
    if args.at:
        s = s.subs(**series.parse_assignment(args.at))
    params = _params(args, "name", "d", "order", "order-y", "at")
    coeffs = s.coefficients()
    if s.bivariate:
        table = [[_coefficient_text(c) for c in row] for row in coeffs]
        flat = [(i, j, c) for i, row in enumerate(table) for j, c in enumerate(row)]
        header = ["x_degree", "y_degree", "coefficient"]
    else:
        table = [_coefficient_text(c) for c in coeffs]
        flat = list(enumerate(table))
        header = ["x_degree", "coefficient"]
    if out.format == "json":
        out.write(_json("series", params, "series", table))
    elif out.format == "csv":
        out.write(_csv(header, flat))
    elif not s.bivariate and s.is_integral():
        out.write(",".join(table) + "\n")
    else:
        lines = []
        for row in flat:
            mono = f"x^{row[0]}" + (f" y^{row[1]}" if s.bivariate else "")
            if row[-1] != "0":
                lines.append(f"{mono}: {row[-1]}\n")
        out.write("".join(lines))
    return 0


# -- verify -----------------------------------------------------------------------


def _report_text(report) -> str:
    lines = [report.summary()]
    for key, value in report.details.items():
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        lines.append(f"  {key}: {value}")
    return "\n".join(lines) + "\n"


def cmd_verify(args, out: OutputConfig) -> int:
    if args.theorem == "xi-literal":
        reports = [verify.check_xi_literal(args.n, args.d or 1)]
    else:
        reports = verify.run_theorem(args.theorem, args.n, args.d, args.order, jobs=args.jobs)
    params = _params(args, "theorem", "n", "d", "order")
    if out.format == "json":
        out.write(_json("verify", params, "report", [r.to_dict() for r in reports]))
    elif out.format == "csv":
        rows = [(r.theorem, json.dumps(r.params), r.status, json.dumps(r.witness)) for r in reports]
        out.write(_csv(["theorem", "params", "status", "witness"], rows))
    else:
        out.write("".join(_report_text(r) for r in reports))
    return 0 if all(r.passed for r in reports) else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="perimeter",
        description="Enumerate, map, count and verify partitions of fixed perimeter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list a finite family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--d", type=int)
    group.add_argument("--k", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply phi_d, its inverse or xi")
    msub = p.add_subparsers(dest="action", required=True)
    a = msub.add_parser("apply", parents=[common])
    a.add_argument("--map", choices=MAPS, required=True)
    a.add_argument("--d", type=int, default=1)
    a.add_argument("--input", required=True, help="bits, parts, or labeled parts like 4,3*,1")
    a.set_defaults(func=cmd_map_apply)
    o = msub.add_parser("orbit", parents=[common])
    o.add_argument("--d", type=int, default=1)
    o.add_argument("--input", required=True)
    o.set_defaults(func=cmd_map_orbit)

    p = sub.add_parser("count", parents=[common], help="recurrence tables and closed forms")
    p.add_argument("--what", choices=COUNTS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", parents=[common], help="truncated generating functions")
    p.add_argument("--name", choices=SERIES, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--order-y", type=int)
    p.add_argument("--at", metavar="p=..,q=..,t=..")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="check theorems by enumeration")
    p.add_argument("--theorem", choices=VERIFY_THEOREMS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = OutputConfig(args.format, args.output)
        return args.func(args, out)
    except (DomainError, ValueError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
