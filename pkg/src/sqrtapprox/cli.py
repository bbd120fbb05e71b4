"""Command-line front end.

Usage:
    sqrtapprox approx --A 3 --method theon --iterations 12 --format csv
    sqrtapprox enclose --A 3 --iterations 12
    sqrtapprox cf --A 7 --count 5
    sqrtapprox pell --A 2 --m -1 --count 3
    sqrtapprox triplets --source family --count 4
    sqrtapprox compare --A 2 --iterations 5
    sqrtapprox verify-archimedes --json
    sqrtapprox sexagesimal "1;24,51,10" --digits 8

Exit status: 0 success, 2 domain error (perfect square, unsupported residue),
64 usage error.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .cfrac import cf_expand, convergents
from .classical import AhmState, ahm_step, heron_sequence
from .pell import solve_pell
from .pythag import pythagoras_family, triple_from_negative_solution
from .ratcore import DomainError, SexagesimalDigits, eval_sexagesimal, residue, to_decimal
from .theon import Side, check_iterable_radicand, enclosure_chain, theon_sequence, verify_archimedes

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_USAGE = 64

METHODS = ("theon", "heron", "ahm", "cf")
FORMATS = ("text", "csv", "json")
CSV_FIELDS = ("method", "index", "num", "den", "side", "residue", "decimal")
MAX_DIGITS = 1000


@dataclass(frozen=True)
class OutputRecord:
    method: str
    index: int
    value_num: int
    value_den: int
    side: str
    residue: Optional[int]
    decimal: str

    @classmethod
    def make(cls, method: str, index: int, value: Fraction, A: int, digits: int) -> "OutputRecord":
        value = Fraction(value)
        return cls(method, index, value.numerator, value.denominator,
                   Side.of(value, A).value, residue(value, A), to_decimal(value, digits))

    @property
    def value(self) -> Fraction:
        return Fraction(self.value_num, self.value_den)

    def csv_row(self) -> list:
        return [self.method, self.index, self.value_num, self.value_den,
                self.side, "" if self.residue is None else self.residue, self.decimal]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _natural(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _digits(text: str) -> int:
    v = _natural(text)
    if v > MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"at most {MAX_DIGITS} digits")
    return v


# ---------------------------------------------------------------- rendering

def _fmt(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _records_csv(records: Sequence[OutputRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow(r.csv_row())
    return buf.getvalue()


def _records_text(records: Sequence[OutputRecord]) -> str:
    rows = [("method", "n", "value", "side", "residue", "decimal")]
    for r in records:
        rows.append((r.method, str(r.index), _fmt(r.value), r.side,
                     "" if r.residue is None else str(r.residue), r.decimal))
    return _table(rows)


def _table(rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _plain_table(fmt: str, header: Sequence[str], rows: Sequence[Sequence], config: dict) -> str:
    if fmt == "json":
        return _dump_json({"config": config, "records": [dict(zip(header, r)) for r in rows]})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    return _table([list(header)] + [[str(c) for c in r] for r in rows])


def _emit_records(fmt: str, records: Sequence[OutputRecord], config: dict) -> str:
    if fmt == "json":
        return _dump_json({"config": config, "records": [asdict(r) for r in records]})
    if fmt == "csv":
        return _records_csv(records)
    return _records_text(records)


# ---------------------------------------------------------------- methods

def method_records(method: str, A: int, iterations: int, x0: int, y0: int,
                   digits: int) -> List[OutputRecord]:
    """Records for one method; index 0 is the seed.

    ``ahm`` starts from the pair (A, 1) and yields a lower and an upper record
    per index.
    """
    if method == "theon":
        return [OutputRecord.make("theon", c.index, c.value, A, digits)
                for c in theon_sequence(A, iterations, x0, y0)]
    if method == "heron":
        return [OutputRecord.make("heron", i, v, A, digits)
                for i, v in enumerate(heron_sequence(A, Fraction(x0), iterations))]
    if method == "cf":
        return [OutputRecord.make("cf", i, v, A, digits)
                for i, v in enumerate(convergents(cf_expand(A), iterations))]
    if method == "ahm":
        out = []
        s = AhmState(0, Fraction(A), Fraction(1))
        for i in range(iterations):
            out.append(OutputRecord.make("ahm", i, s.b, A, digits))
            out.append(OutputRecord.make("ahm", i, s.a, A, digits))
            s = ahm_step(s)
        return out
    raise UsageError(f"unknown method {method!r}")


def _config(args, *keys) -> dict:
    return {k: getattr(args, k) for k in keys}


# ---------------------------------------------------------------- commands

def cmd_approx(args) -> str:
    if args.method in ("theon", "cf"):
        check_iterable_radicand(args.A)
    recs = method_records(args.method, args.A, args.iterations, args.x0, args.y0, args.digits)
    cfg = _config(args, "A", "iterations", "method", "x0", "y0", "format", "digits")
    return _emit_records(args.format, recs, cfg)


def cmd_enclose(args) -> str:
    chain = enclosure_chain(args.A, args.iterations, args.x0, args.y0)
    recs = sorted(chain.below + chain.above, key=lambda c: c.index)
    if args.format == "text":
        lows = " < ".join(_fmt(c.value) for c in chain.below)
        highs = " < ".join(_fmt(c.value) for c in reversed(chain.above))
        parts = [p for p in (lows, f"sqrt({args.A})", highs) if p]
        return " < ".join(parts) + "\n"
    out = [OutputRecord.make("theon", c.index, c.value, args.A, args.digits) for c in recs]
    return _emit_records(args.format, out, _config(args, "A", "iterations", "x0", "y0", "digits"))


def cmd_cf(args) -> str:
    cf = cf_expand(args.A)
    recs = [OutputRecord.make("cf", i, v, args.A, args.digits)
            for i, v in enumerate(convergents(cf, args.count))]
    if args.format == "json":
        return _dump_json({
            "config": _config(args, "A", "count", "digits"),
            "expansion": {"A": cf.A, "a0": cf.a0, "period": list(cf.period)},
            "records": [asdict(r) for r in recs],
        })
    if args.format == "csv":
        return _records_csv(recs)
    return f"{cf}\n" + _records_text(recs)


def cmd_pell(args) -> str:
    sols = solve_pell(args.A, args.m, args.count)
    rows = [(i, s.x, s.y, s.m, s.x * s.x - args.A * s.y * s.y == s.m) for i, s in enumerate(sols)]
    if not rows:
        print(f"no solutions of x^2 - {args.A}y^2 = {args.m}", file=sys.stderr)
    header = ("index", "x", "y", "m", "verified")
    if args.format == "text":
        rows = [(i, x, y, m, "yes" if ok else "NO") for i, x, y, m, ok in rows]
        if not rows:
            return "no solutions\n"
    return _plain_table(args.format, header, rows, _config(args, "A", "m", "count"))


def cmd_triplets(args) -> str:
    if args.source == "family":
        triples = [pythagoras_family(n) for n in range(1, args.count + 1)]
    else:
        triples = [triple_from_negative_solution(s.x, s.y) for s in solve_pell(2, -1, args.count)]
    rows = [(i, t.a, t.b, t.c) for i, t in enumerate(triples)]
    return _plain_table(args.format, ("index", "a", "b", "c"), rows,
                        _config(args, "source", "count"))


def cmd_compare(args) -> str:
    check_iterable_radicand(args.A)
    n = args.iterations + 1
    recs = []
    for method in METHODS:
        recs.extend(method_records(method, args.A, n, 1, 1, args.digits))
    recs.sort(key=lambda r: (r.index, METHODS.index(r.method)))
    cfg = _config(args, "A", "iterations", "format", "digits")
    if args.format != "text":
        return _emit_records(args.format, recs, cfg)
    rows = [("n", "method", "value", "side", "|residue|", "den_bits", "decimal")]
    for r in recs:
        rows.append((str(r.index), r.method, _fmt(r.value), r.side, str(abs(r.residue)),
                     str(r.value_den.bit_length()), r.decimal))
    return _table(rows)


def cmd_verify_archimedes(args) -> str:
    report = verify_archimedes()
    args.exit_code = EXIT_OK if report["passed"] else 1
    if args.format == "json":
        keys = ("lower", "upper", "lower_ok", "upper_ok", "scaled_ok", "equivalence_ok", "checks")
        return _dump_json({k: report[k] for k in keys})
    lo, hi = report["checks"]["lower"], report["checks"]["upper"]
    mark = lambda ok: "ok" if ok else "FAILED"
    lines = [
        f"lower {report['lower']}: {lo['num_sq']} < {lo['three_den_sq']}  {mark(report['lower_ok'])}",
        f"upper {report['upper']}: {hi['num_sq']} > {hi['three_den_sq']}  {mark(report['upper_ok'])}",
        f"26 - 1/51 < 15*sqrt(3) < 26 - 1/52  {mark(report['scaled_ok'])}",
        f"(26 - 1/51)/15 = {report['lower']}, (26 - 1/52)/15 = {report['upper']}  "
        f"{mark(report['equivalence_ok'])}",
        "PASS" if report["passed"] else "FAIL",
    ]
    return "\n".join(lines) + "\n"


def cmd_sexagesimal(args) -> str:
    d = SexagesimalDigits.parse(args.literal)
    v = eval_sexagesimal(d)
    dec = to_decimal(v, args.digits)
    if args.format == "json":
        return _dump_json({"config": _config(args, "literal", "digits"),
                           "value_num": v.numerator, "value_den": v.denominator, "decimal": dec})
    if args.format == "csv":
        return f"literal,num,den,decimal\n{d},{v.numerator},{v.denominator},{dec}\n"
    return f"{d} = {_fmt(v)} = {dec}\n"


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sqrtapprox", description="Exact rational square-root approximations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=FORMATS, default="text")
        return sp

    def radicand(sp):
        sp.add_argument("--A", type=_natural, required=True, help="radicand")

    def digits(sp):
        sp.add_argument("--digits", type=_digits, default=12, help="decimal places shown")

    sp = add("approx", cmd_approx, "iterate one method")
    radicand(sp)
    sp.add_argument("--method", choices=METHODS, default="theon")
    sp.add_argument("--iterations", type=_positive, default=10)
    sp.add_argument("--x0", type=_positive, default=1)
    sp.add_argument("--y0", type=_positive, default=1)
    digits(sp)

    sp = add("enclose", cmd_enclose, "lower/upper chains of side-diagonal ratios")
    radicand(sp)
    sp.add_argument("--iterations", type=_positive, default=10)
    sp.add_argument("--x0", type=_positive, default=1)
    sp.add_argument("--y0", type=_positive, default=1)
    digits(sp)

    sp = add("cf", cmd_cf, "continued fraction of sqrt(A)")
    radicand(sp)
    sp.add_argument("--count", type=_positive, default=10)
    digits(sp)

    sp = add("pell", cmd_pell, "solutions of x^2 - A y^2 = m")
    radicand(sp)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--count", type=_natural, default=5)

    sp = add("triplets", cmd_triplets, "Pythagorean triples")
    sp.add_argument("--source", choices=("pell2", "family"), default="family")
    sp.add_argument("--count", type=_positive, default=5)

    sp = add("compare", cmd_compare, "all methods side by side")
    radicand(sp)
    sp.add_argument("--iterations", type=_positive, default=8)
    digits(sp)

    sp = add("verify-archimedes", cmd_verify_archimedes, "check 265/153 < sqrt(3) < 1351/780")
    sp.add_argument("--json", dest="format", action="store_const", const="json")

    sp = add("sexagesimal", cmd_sexagesimal, "evaluate a base-60 literal such as 1;24,51,10")
    sp.add_argument("literal")
    digits(sp)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.exit_code = EXIT_OK
    try:
        out = args.func(args)
    except DomainError as exc:
        print(f"sqrtapprox {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except UsageError as exc:
        print(f"sqrtapprox {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return args.exit_code


def run() -> None:
    sys.exit(main())
