"""Command-line tables: ``pellconic {power,redei,approximate,pythagorean,check}``.

Stdout carries only the deterministic table (TSV with a header row, or a
JSON array). Timings, warnings and skipped rows go to stderr; in TSV mode
notes that belong to the table are appended as ``#`` lines.

Exit codes: 0 ok, 1 usage, 2 domain error, 3 precision exhausted, 4 a
``check`` property failed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from decimal import Context, Decimal
from fractions import Fraction
from typing import Sequence

from . import checks
from .approximation import approx_over_conic, point_ratio_limit, pythagorean_stream
from .errors import ConicError, DegenerateDenominator, DomainError, ParseError, PrecisionExhausted
from .field import ConicParams, FieldSpec
from .group import ALPHA, ConicPoint, e_pow, format_param, tau
from .power import q_param
from .quadratic import QuadraticIrrational
from .reals import parse_real
from .redei import STRATEGIES, nd_pair

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_PRECISION, EXIT_CHECK = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- rendering -----------------------------------------------------------


def decimal_str(q: Fraction, digits: int) -> str:
    """q to ``digits`` significant digits, trailing zeros dropped (12/5 -> '2.4')."""
    ctx = Context(prec=digits)
    v = ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    s = format(v.normalize(ctx), "f")
    return s


def render(rows: Sequence[dict], columns: Sequence[str], fmt: str = "tsv", notes: Sequence[str] = ()) -> str:
    """TSV (header + rows + ``#`` notes) or a compact JSON array of objects."""
    if fmt == "json":
        return json.dumps([{c: r[c] for c in columns} for r in rows], separators=(",", ":"),
                          ensure_ascii=False) + "\n"
    lines = ["\t".join(columns)]
    lines += ["\t".join(str(r[c]) for c in columns) for r in rows]
    lines += [f"# {n}" for n in notes]
    return "\n".join(lines) + "\n"


def format_value(v, field: FieldSpec) -> str:
    if isinstance(v, QuadraticIrrational):
        return str(v)
    return field.format(v)


# -- subcommands ---------------------------------------------------------


def _params(args, field: FieldSpec) -> ConicParams:
    return ConicParams(field.parse(args.h), field.parse(args.d), field)


def cmd_power(args, out, err) -> int:
    field = args.field_spec
    if field.kind == "real":
        raise UsageError("power works over rational or fp:<p> fields")
    params = _params(args, field)
    p = ConicPoint(field.parse(args.x), field.parse(args.y), params)
    rows = []
    for n in range(args.steps + 1):
        q = e_pow(p, n)
        if not field.is_zero(p.y):
            qn = q_param(p, n)
        else:
            qn = tau(q)
        ratio, dec = "", ""
        if not field.is_zero(q.x):
            r = q.y / q.x
            ratio = field.format(r)
            dec = decimal_str(r, args.digits) if field.kind == "rational" else ""
        rows.append({"n": n, "x": field.format(q.x), "y": field.format(q.y),
                     "q": format_param(qn, params), "ratio": ratio, "ratio_decimal": dec})
    notes, status = [], EXIT_OK
    if field.kind == "rational":
        try:
            lim = point_ratio_limit(p)
        except DomainError as exc:
            err.write(f"limit: {exc}\n")
            status = EXIT_DOMAIN
        else:
            if isinstance(lim, QuadraticIrrational):
                ctx = FieldSpec.real(max(args.digits + 10, 30)).ctx
                notes.append(f"limit\t{lim}\t{lim.reciprocal_form()}\t{ctx.nstr(lim.to_mpf(ctx), args.digits)}")
            else:
                notes.append(f"limit\t{field.format(lim)}\t{decimal_str(lim, args.digits)}")
    _emit(out, err, rows, ["n", "x", "y", "q", "ratio", "ratio_decimal"], args.format, notes)
    return status


def cmd_redei(args, out, err) -> int:
    field = args.field_spec
    if field.kind == "real":
        raise UsageError("redei works over rational or fp:<p> fields")
    h, d, z = field.parse(args.h), field.parse(args.d), field.parse(args.z)
    rows = []
    for n in range(args.steps + 1):
        pair = nd_pair(h, d, z, n, args.strategy)
        try:
            Q = pair.Q
            qtext = "alpha" if Q is ALPHA else field.format(Q)
        except DegenerateDenominator:
            qtext = "undefined"
        rows.append({"n": n, "N": field.format(pair.N), "D": field.format(pair.D), "Q": qtext})
    _emit(out, err, rows, ["n", "N", "D", "Q"], args.format, [])
    timings = []
    for strategy in STRATEGIES:
        t0 = time.perf_counter()
        nd_pair(h, d, z, args.steps, strategy)
        timings.append(f"{strategy}={1e3 * (time.perf_counter() - t0):.3f}ms")
    err.write(f"timing n={args.steps}: " + " ".join(timings) + "\n")
    return EXIT_OK


def _real_field(args) -> FieldSpec:
    field = args.field_spec if args.field_given else FieldSpec.real(60)
    if field.kind != "real":
        raise UsageError("approximate/pythagorean need --field real:<digits>")
    return field


def _mp(ctx, v, digits):
    return "" if v is None else ctx.nstr(v, digits)


def cmd_approximate(args, out, err) -> int:
    spec = _real_field(args)
    rat = FieldSpec.rational()
    params = ConicParams(rat.parse(args.h), rat.parse(args.d), rat)
    beta = parse_real(args.beta)
    table = approx_over_conic(params, beta, args.steps, spec, args.root)
    ctx = spec.ctx
    rows, notes = [], []
    for s in table:
        if not s.ok:
            notes.append(f"skipped n={s.n} (p/q = {s.p}/{s.q}): {s.flag}")
            continue
        rows.append({"n": s.n, "p": s.p, "q": s.q, "x": rat.format(s.x), "y": rat.format(s.y),
                     "ratio": rat.format(s.ratio), "ratio_decimal": decimal_str(s.ratio, args.digits),
                     "abs_error": _mp(ctx, s.abs_error, args.digits)})
    notes.insert(0, f"alpha\t{table.alpha}\tdigits {list(table.expansion.digits)}")
    _emit(out, err, rows, ["n", "p", "q", "x", "y", "ratio", "ratio_decimal", "abs_error"], args.format, notes)
    return _precision_status(table, args.steps, err)


def cmd_pythagorean(args, out, err) -> int:
    spec = _real_field(args)
    beta = parse_real(args.beta)
    table = pythagorean_stream(beta, args.steps, spec, args.root)
    ctx = spec.ctx
    rows, notes = [], []
    for s in table:
        if not s.ok:
            notes.append(f"skipped n={s.n} (p/q = {s.p}/{s.q}): {s.flag}")
            continue
        A, B, C = s.triple
        rows.append({"n": s.n, "p": s.p, "q": s.q, "A": A, "B": B, "C": C,
                     "ratio": _frac(s.ratio), "ratio_decimal": decimal_str(s.ratio, args.digits),
                     "abs_error": _mp(ctx, s.abs_error, args.digits)})
    _emit(out, err, rows, ["n", "p", "q", "A", "B", "C", "ratio", "ratio_decimal", "abs_error"],
          args.format, notes)
    return _precision_status(table, args.steps, err)


def _frac(q: Fraction) -> str:
    return FieldSpec.rational().format(q)


def _precision_status(table, steps, err) -> int:
    if len(table.valid) < steps:
        err.write(f"warning: precision exhausted after {len(table.expansion.digits)} "
                  f"partial quotients; {len(table.valid)} of {steps} rows produced\n")
        return EXIT_PRECISION
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    suites = checks.SUITES if args.suite == "all" else (args.suite,)
    rows = []
    for name in suites:
        t0 = time.perf_counter()
        for r in checks.run_suite(name, args.seed, args.samples):
            rows.append({"status": "PASS" if r.passed else "FAIL", "suite": r.suite,
                         "property": r.name, "checked": r.checked, "failed": len(r.failures)})
            for f in r.failures:
                err.write(f"failure in {r.suite}/{r.name}: {f!r}\n")
        err.write(f"suite {name}: {time.perf_counter() - t0:.2f}s\n")
    _emit(out, err, rows, ["status", "suite", "property", "checked", "failed"], args.format, [])
    return EXIT_OK if all(r["status"] == "PASS" for r in rows) else EXIT_CHECK


def _emit(out, err, rows, columns, fmt, notes):
    if fmt == "json":
        out.write(render(rows, columns, "json"))
        for n in notes:
            err.write(f"note: {n}\n")
    else:
        out.write(render(rows, columns, "tsv", notes))


# -- argument parsing ----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default=None, help="rational | fp:<p> | real:<digits>")
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--digits", type=int, default=10, help="significant digits of decimal columns")

    parser = _Parser(prog="pellconic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("power", parents=[common], help="powers of a point and the limit of y_n/x_n")
    for name in ("h", "d", "x", "y"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("-n", "--steps", type=int, required=True)

    p = sub.add_parser("redei", parents=[common], help="N_n, D_n and Q_n for n = 0..N")
    for name in ("h", "d", "z"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("-n", "--steps", type=int, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="matrix")

    for name, helptext in (("approximate", "points of E(h, d) approximating beta"),
                           ("pythagorean", "Pythagorean triples approximating beta")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name == "approximate":
            p.add_argument("--h", default="0")
            p.add_argument("--d", default="-1")
        p.add_argument("--beta", required=True, help="pi | sqrt:<k> | rat:<p>/<q> | <decimal> | expression")
        p.add_argument("-n", "--steps", type=int, required=True)
        p.add_argument("--root", choices=("+", "-"), default="+")

    p = sub.add_parser("check", parents=[common], help="seeded invariant suites")
    p.add_argument("--suite", choices=checks.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    return parser


COMMANDS = {"power": cmd_power, "redei": cmd_redei, "approximate": cmd_approximate,
            "pythagorean": cmd_pythagorean, "check": cmd_check}


_VALUE_FLAGS = {"--h", "--d", "--x", "--y", "--z", "--beta"}


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--h -13/4`` into ``--h=-13/4`` so argparse does not read a flag."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith(("-", "−")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        args.field_given = args.field is not None
        args.field_spec = FieldSpec.from_text(args.field or "rational")
        if getattr(args, "steps", 0) < 0:
            raise UsageError("-n must be non-negative")
        return COMMANDS[args.command](args, out, err)
    except (UsageError, ParseError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except PrecisionExhausted as exc:
        err.write(f"precision exhausted: {exc}\n")
        return EXIT_PRECISION
    except (DomainError, ValueError, ConicError) as exc:
        err.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
