"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line; the lines are printed in the
terminal summary (see conftest.py) and by ``python3 tests/test_acceptance.py``.
"""
import io
import subprocess
import sys
import time
from pathlib import Path
from decimal import ROUND_DOWN, Context, Decimal
from fractions import Fraction

import mpmath
import pytest

from pellconic import ConicParams, ConicPoint, FieldSpec, cf_expand, fg_pair, point_ratio_limit
from pellconic import pythagorean_stream, solve_auxiliary
from pellconic.approximation import approx_over_conic
from pellconic.checks import run_suite
from pellconic.cli import main

RESULTS = {}


def record(key, ok, detail):
    RESULTS[key] = f"{'PASS' if ok else 'FAIL'}  {key}: {detail}"
    return ok


def decimal(q, places, rounding):
    v = Context(prec=60).divide(Decimal(q.numerator), Decimal(q.denominator))
    return Context(prec=places, rounding=rounding).plus(v)


def truncated(q, places_after_point):
    v = Context(prec=60).divide(Decimal(q.numerator), Decimal(q.denominator))
    return v.quantize(Decimal(1).scaleb(-places_after_point), rounding=ROUND_DOWN)


EX1_ARGS = ["power", "--h", "-13/4", "--d", "2", "--x", "4", "--y", "1", "-n", "5"]
EX1_POWERS = [(18, Fraction(19, 4)), (Fraction(163, 2), Fraction(345, 16)),
              (Fraction(2953, 8), Fraction(6251, 64)), (Fraction(53499, 32), Fraction(113249, 256))]
EX1_DECIMALS = ["0.25", "0.26388", "0.26457", "0.26460", "0.26460"]


def test_criterion_1_example_power_table():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "pellconic", *EX1_ARGS], capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    out = io.StringIO()
    code = main(EX1_ARGS, out, io.StringIO())
    assert proc.stdout == out.getvalue()
    lines = out.getvalue().splitlines()
    rows = [ln.split("\t") for ln in lines[1:] if not ln.startswith("#")]
    table = [(Fraction(r[1]), Fraction(r[2])) for r in rows]
    p = ConicPoint(4, 1, ConicParams(Fraction(-13, 4), 2))
    exact = code == 0 and table[2:6] == EX1_POWERS and all(
        (fg_pair(p, n).F, fg_pair(p, n).G) == xy for n, xy in enumerate(EX1_POWERS, 2))
    ratios = [y / x for x, y in table[1:6]]
    rounded = [str(decimal(r, 5, "ROUND_HALF_EVEN")) for r in ratios]
    cut = [str(decimal(r, 5, ROUND_DOWN)) for r in ratios]
    limit_line = next(ln for ln in lines if ln.startswith("# limit"))
    lim = point_ratio_limit(p)
    with mpmath.workdps(30):
        lim_ok = abs(lim.to_mpf(mpmath.mp) - mpmath.mpf("0.264605")) <= mpmath.mpf("5e-7")
    checks = {
        "1a exact powers": record("1a exact powers", exact, f"{len(table) - 1} powers, exit {code}"),
        "1b ratio decimals": record(
            "1b ratio decimals (5 sig. digits, rounded)", rounded == EX1_DECIMALS,
            f"rounded {rounded} vs published {EX1_DECIMALS}; truncated {cut}"),
        "1c limit": record("1c limit", "8/(13+3√33)" in limit_line and lim_ok, limit_line.replace("\t", " ")),
        "1d runtime": record("1d runtime", elapsed < 1, f"{elapsed:.3f}s for the whole command < 1s"),
    }
    assert all(checks.values()), [RESULTS[k] for k in RESULTS if k.startswith("1")]


def test_criterion_2_continued_fraction():
    t0 = time.perf_counter()
    alpha = solve_auxiliary(ConicParams(0, -1), "pi", 60).root("+")
    e = cf_expand(alpha, 10, FieldSpec.real(60))
    elapsed = time.perf_counter() - t0
    p = tuple(c[0] for c in e.convergents)
    q = tuple(c[1] for c in e.convergents)
    ok = (e.digits == (1, 2, 1, 2, 1, 1, 3, 1, 1, 5)
          and p == (1, 3, 4, 11, 15, 26, 93, 119, 212, 1179)
          and q == (1, 2, 3, 8, 11, 19, 68, 87, 155, 862) and elapsed < 1)
    assert record("2 continued fraction", ok, f"digits {list(e.digits)}, {elapsed:.3f}s")


PI_RATIOS = [Fraction(12, 5), Fraction(24, 7), Fraction(176, 57), Fraction(165, 52), Fraction(988, 315),
             Fraction(12648, 4025), Fraction(10353, 3296), Fraction(65720, 20919),
             Fraction(2032596, 646997)]
PI_DECIMALS = ["2.4", "3.4285", "3.0877", "3.1730", "3.1365", "3.1423", "3.1410", "3.1416", "3.1415"]


def test_criterion_3_approximations():
    table = approx_over_conic(ConicParams(0, -1), "pi", 9, FieldSpec.real(60))
    ratios = [s.ratio for s in table.valid]
    printed = [str(truncated(r, len(d.split(".")[1]))) for r, d in zip(ratios, PI_DECIMALS)]
    with mpmath.workdps(30):
        err = abs(mpmath.mpf(ratios[-1].numerator) / ratios[-1].denominator - mpmath.pi)
    ok = ratios == PI_RATIOS and printed == PI_DECIMALS and err < mpmath.mpf("1e-5")
    assert record("3 approximations of pi", ok, f"|ratio9 - pi| = {mpmath.nstr(err, 3)}")


def test_criterion_4_triples():
    table = pythagorean_stream("pi", 9, FieldSpec.real(60))
    triples = [s.triple for s in table.valid]
    exact = all(a * a + b * b == c * c for a, b, c in triples)
    readme = (Path(__file__).parents[1] / "README.md").read_text()
    ok = (triples[:5] == [(5, 12, 13), (7, 24, 25), (57, 176, 185), (52, 165, 173), (315, 988, 1037)]
          and exact and "(52, 165, 346)" in readme)
    assert record("4 Pythagorean triples", ok, f"{triples[:5]}, erratum documented in README")


def _suite(key, name, samples, limit=None):
    t0 = time.perf_counter()
    results = run_suite(name, seed=0, samples=samples)
    elapsed = time.perf_counter() - t0
    failed = [r for r in results if not r.passed]
    ok = not failed and (limit is None or elapsed < limit)
    checked = sum(r.checked for r in results)
    record(key, ok, f"{len(results)} properties, {checked} cases, {len(failed)} failing, {elapsed:.1f}s")
    assert ok, [r.line() for r in failed]


def test_criterion_5_group_suite():
    _suite("5 group suite (500 samples)", "group", 500, limit=60)


def test_criterion_6_redei_suite():
    _suite("6 Redei suite (200 samples, n <= 256)", "redei", 200)


def test_criterion_7_power_suite():
    _suite("7 point-power suite (200 samples)", "power", 200)


def test_criterion_8_approx_suite():
    _suite("8 limit numerics (100 specs, 50 points)", "approx", 100)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
