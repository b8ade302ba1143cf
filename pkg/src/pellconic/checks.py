"""Seeded invariant suites behind ``pellconic check`` and the acceptance tests.

Each suite takes a :class:`random.Random` and a sample count and returns one
:class:`PropertyResult` per property. Sampling domains:

* prime fields: p in (3, 7, 11, 19) with h^2 + 4d a non-residue;
* rationals: numerators in [-9, 9], denominators in [1, 6];
* limit numerics: root ratio |w - sqrt(c)| / |w + sqrt(c)| <= 0.7 for the
  recurrence specs and 2x + hy >= 5/2 for conic points, so that N = 200 and
  N = 60 terms reach the stated tolerances.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import AlgebraElement, alg_conj, alg_mul, alg_norm
from .approximation import (
    RecurrenceLimitSpec,
    point_ratio_limit,
    recurrence_ratio_limit,
)
from .errors import DegenerateDenominator, NoConvergenceError, ParametrizationPole
from .field import ConicParams, FieldSpec, poly_irreducible
from .group import (
    ALPHA,
    ConicPoint,
    all_points,
    e_inverse,
    e_mul,
    e_pow,
    e_pow_naive,
    eps,
    p_eq,
    p_inverse,
    p_mul,
    p_pow,
    tau,
)
from .power import fg_pair, q_halving_check, q_param, q_param_redei, q_param_tau
from .quadratic import QuadraticIrrational
from .redei import nd_add, nd_pair, redei_Q, redei_table

PRIMES = (3, 7, 11, 19)
SUITES = ("group", "redei", "power", "approx")


@dataclass
class PropertyResult:
    suite: str
    name: str
    checked: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)  # first few failing cases
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  first failure: {self.failures[0]}" if self.failures else ""
        return f"{status}\t{self.suite}\t{self.name}\t{self.checked} checked\t{self.failed} failed{extra}"


class _Recorder:
    def __init__(self, suite: str):
        self.suite = suite
        self.results: dict[str, PropertyResult] = {}

    def check(self, name: str, ok: bool, detail=None):
        r = self.results.setdefault(name, PropertyResult(self.suite, name))
        r.checked += 1
        if not ok:
            r.failed += 1
            if len(r.failures) < 5:
                r.failures.append(detail)

    def timed(self, name: str, fn: Callable[[], None]):
        t0 = time.perf_counter()
        fn()
        r = self.results.setdefault(name, PropertyResult(self.suite, name))
        r.seconds += time.perf_counter() - t0


# -- samplers ------------------------------------------------------------


def random_rational(rng: random.Random, num: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_prime_params(rng: random.Random, p: int | None = None) -> ConicParams:
    """(h, d) over F_p with x^2 - hx - d irreducible."""
    p = p or rng.choice(PRIMES)
    f = FieldSpec.prime(p)
    while True:
        params = ConicParams(rng.randrange(p), rng.randrange(p), f)
        if poly_irreducible(params):
            return params


def random_rational_params(rng: random.Random, irreducible: bool = True) -> ConicParams:
    while True:
        params = ConicParams(random_rational(rng), random_rational(rng))
        if not irreducible or poly_irreducible(params):
            return params


def random_rational_point(rng: random.Random, params: ConicParams) -> ConicPoint:
    while True:
        m = random_rational(rng)
        try:
            return eps(m, params)
        except ParametrizationPole:
            continue


_POINT_CACHE: dict = {}


def prime_points(params: ConicParams) -> list[ConicPoint]:
    key = (params.field.p, int(params.h), int(params.d))
    if key not in _POINT_CACHE:
        _POINT_CACHE[key] = all_points(params)
    return _POINT_CACHE[key]


def random_param_value(rng: random.Random, params: ConicParams):
    if rng.random() < 0.1:
        return ALPHA
    if params.field.kind == "prime":
        return params.field(rng.randrange(params.field.p))
    return random_rational(rng)


def _sample_config(rng: random.Random, i: int):
    """Alternate prime-field and rational configurations; returns (params, point sampler)."""
    if i % 2 == 0:
        params = random_prime_params(rng)
        pts = prime_points(params)
        return params, lambda: rng.choice(pts)
    params = random_rational_params(rng)
    return params, lambda: random_rational_point(rng, params)


# -- suites --------------------------------------------------------------


def group_suite(rng: random.Random, samples: int = 500) -> list[PropertyResult]:
    rec = _Recorder("group")

    def run():
        for i in range(samples):
            params, point = _sample_config(rng, i)
            a, b, c = point(), point(), point()
            one = ConicPoint.identity(params)
            rec.check("E associativity", e_mul(e_mul(a, b), c) == e_mul(a, e_mul(b, c)), (a, b, c))
            rec.check("E commutativity", e_mul(a, b) == e_mul(b, a), (a, b))
            rec.check("E identity", e_mul(one, a) == a, a)
            rec.check("E inverse", e_mul(a, e_inverse(a)) == one, a)

            s, t, u = (random_param_value(rng, params) for _ in range(3))
            pm = lambda x, y: p_mul(x, y, params)  # noqa: E731
            eq = lambda x, y: p_eq(x, y, params)  # noqa: E731
            rec.check("P associativity", eq(pm(pm(s, t), u), pm(s, pm(t, u))), (s, t, u))
            rec.check("P commutativity", eq(pm(s, t), pm(t, s)), (s, t))
            rec.check("P identity", eq(pm(ALPHA, s), s), s)
            rec.check("P inverse", pm(s, p_inverse(s, params)) is ALPHA, s)

            rec.check("tau is a homomorphism", eq(tau(e_mul(a, b)), pm(tau(a), tau(b))), (a, b))
            rec.check("eps is a homomorphism", eps(pm(s, t), params) == e_mul(eps(s, params), eps(t, params)), (s, t))
            rec.check("tau(eps(m)) = m", eq(tau(eps(s, params)), s), s)
            rec.check("eps(tau(P)) = P", eps(tau(a), params) == a, a)

            rec.check("quotient-group product", _quotient_agrees(s, t, params), (s, t))

            x = AlgebraElement(random_param_value_finite(rng, params), random_param_value_finite(rng, params), params)
            y = AlgebraElement(random_param_value_finite(rng, params), random_param_value_finite(rng, params), params)
            rec.check("norm multiplicativity", alg_norm(alg_mul(x, y)) == alg_norm(x) * alg_norm(y), (x, y))
            rec.check("u * conj(u) = N(u)", alg_mul(x, alg_conj(x)) == AlgebraElement(alg_norm(x), 0, params), x)

        # exhaustive group axioms on every small prime field conic
        for p in PRIMES:
            params = random_prime_params(rng, p)
            pts = prime_points(params)
            ok = all(e_mul(e_mul(a, b), c) == e_mul(a, e_mul(b, c)) for a in pts for b in pts for c in pts[:5])
            rec.check("E associativity (exhaustive pairs, F_p)", ok, params)
            rec.check("|E| = p + 1 (F_p, irreducible)", len(pts) == p + 1, params)

    rec.timed("E associativity", run)
    return list(rec.results.values())


def random_param_value_finite(rng, params):
    v = random_param_value(rng, params)
    return params.field.zero if v is ALPHA else v


def _quotient_agrees(a, b, params) -> bool:
    """Class of (a + x)(b + x) in A*/F*, compared with a ⊙_P b."""
    if a is ALPHA or b is ALPHA:
        return True
    prod = alg_mul(AlgebraElement(a, 1, params), AlgebraElement(b, 1, params))
    f = params.field
    expected = p_mul(a, b, params)
    if f.is_zero(prod.b):
        return expected is ALPHA
    return expected is not ALPHA and f.eq(prod.a / prod.b, expected)


def _random_redei_context(rng: random.Random, i: int):
    if i % 2 == 0:
        f = FieldSpec.prime(rng.choice(PRIMES))
        return f(rng.randrange(f.p)), f(rng.randrange(f.p)), f(rng.randrange(f.p))
    return random_rational(rng), random_rational(rng), random_rational(rng)


def redei_suite(rng: random.Random, samples: int = 200, n_max: int = 256) -> list[PropertyResult]:
    rec = _Recorder("redei")

    def run():
        for i in range(samples):
            h, d, z = _random_redei_context(rng, i)
            table = redei_table(h, d, z, n_max)
            f = table[0].field
            k = z * z + h * z - d
            unit = table[1]
            acc = table[0]
            kn = f.one
            for n, pair in enumerate(table):
                m = nd_pair(h, d, z, n, "matrix")
                rec.check("matrix = recurrence", f.eq(m.N, pair.N) and f.eq(m.D, pair.D), (h, d, z, n))
                rec.check("addition fold = recurrence", f.eq(acc.N, pair.N) and f.eq(acc.D, pair.D), (h, d, z, n))
                rec.check("N^2 + hND - dD^2 = (z^2+hz-d)^n", f.eq(pair.norm(), kn), (h, d, z, n))
                acc = nd_add(acc, unit)
                kn = kn * k
            params = ConicParams(h, d, f)
            if f.is_zero(k):
                # singular step matrix: Q_n can be 0/0 and z is no unit of ⊙_P
                continue
            for _ in range(4):
                n, m = rng.randint(0, n_max // 2), rng.randint(0, n_max // 2)
                lhs = table[n + m].Q
                rhs = p_mul(table[n].Q, table[m].Q, params)
                rec.check("Q_{n+m} = Q_n ⊙ Q_m", p_eq(lhs, rhs, params), (h, d, z, n, m))
                rec.check("Q_n = n-fold power of z", p_eq(table[n].Q, p_pow(z, n, params), params), (h, d, z, n))
            for _ in range(2):
                n, m = rng.randint(1, 12), rng.randint(1, 12)
                inner = table[m].Q
                if inner is ALPHA:
                    continue
                rec.check("Q_n(Q_m(z)) = Q_nm", p_eq(redei_Q(h, d, inner, n), table[n * m].Q if n * m <= n_max
                                                     else redei_Q(h, d, z, n * m), params), (h, d, z, n, m))
        # contexts with z^2 + hz - d = 1 put (N_n, D_n) on the conic
        for i in range(max(1, samples // 4)):
            if i % 2 == 0:
                f = FieldSpec.prime(rng.choice(PRIMES))
                h, z = f(rng.randrange(f.p)), f(rng.randrange(f.p))
            else:
                h, z = random_rational(rng), random_rational(rng)
            d = z * z + h * z - 1
            params = ConicParams(h, d, FieldSpec.prime(h.p) if not isinstance(h, Fraction) else FieldSpec.rational())
            for n in range(0, 40):
                pair = nd_pair(h, d, z, n)
                try:
                    ConicPoint(pair.N, pair.D, params)
                    ok = True
                except ValueError:
                    ok = False
                rec.check("(N_n, D_n) on E when z^2+hz-d = 1", ok, (h, d, z, n))

    rec.timed("matrix = recurrence", run)
    return list(rec.results.values())


def _halving_sample(rec, rng, i, p, attempts=50):
    """One halving check per sample, redrawing until y and G_n are nonzero."""
    for _ in range(attempts):
        n = rng.randint(1, 40)
        if not p.params.field.is_zero(p.y):
            try:
                rec.check("q_2n = F_n / G_n", q_halving_check(p, n), (p, n))
                return
            except DegenerateDenominator:
                pass
        p = _sample_config(rng, i)[1]()
    rec.check("q_2n = F_n / G_n", False, ("no point with nonzero denominators", i))


def power_suite(rng: random.Random, samples: int = 200, n_fg: int = 256, n_q: int = 64) -> list[PropertyResult]:
    rec = _Recorder("power")

    def run():
        for i in range(samples):
            params, point = _sample_config(rng, i)
            p = point()
            f = params.field
            # fg vs e_pow over the whole range on a subset, random indices otherwise
            ns = range(n_fg + 1) if i < 8 else [rng.randint(0, n_fg) for _ in range(6)]
            for n in ns:
                q = e_pow(p, n)
                fg = fg_pair(p, n)
                fr = fg_pair(p, n, strategy="recurrence") if n <= 64 else fg
                rec.check("fg_pair = e_pow", f.eq(fg.F, q.x) and f.eq(fg.G, q.y)
                          and f.eq(fr.F, q.x) and f.eq(fr.G, q.y), (p, n))
            if i < 8:
                for n in range(-8, 65):
                    rec.check("e_pow = naive fold", e_pow(p, n) == e_pow_naive(p, n), (p, n))
            if not f.is_zero(p.y):
                for n in (range(n_q + 1) if i < 8 else [rng.randint(0, n_q) for _ in range(4)]):
                    rec.check("q_n = tau(P^n)", p_eq(q_param(p, n), q_param_tau(p, n), params), (p, n))
                    if n >= 1:
                        rec.check("q_n = Q_n(h, d, (1+x)/y)",
                                  p_eq(q_param(p, n), q_param_redei(p, n), params), (p, n))
            _halving_sample(rec, rng, i, p)

    rec.timed("fg_pair = e_pow", run)
    return list(rec.results.values())


def _mp_fraction(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


def _mp_exact(ctx, v):
    if isinstance(v, QuadraticIrrational):
        return v.to_mpf(ctx)
    return _mp_fraction(ctx, v)


def random_limit_spec(rng: random.Random) -> RecurrenceLimitSpec:
    import math

    while True:
        w = Fraction(rng.randint(1, 40), rng.randint(1, 4))
        c = Fraction(rng.randint(1, 400), rng.randint(1, 9))
        a0, a1, b0, b1 = (random_rational(rng) for _ in range(4))
        sc = math.sqrt(c)
        if abs(float(w) - sc) / (float(w) + sc) > 0.7:
            continue
        spec = RecurrenceLimitSpec(a0, a1, b0, b1, w, c)
        if float(b1 - b0 * w) + float(b0) * sc == 0:
            continue
        return spec


def approx_suite(rng: random.Random, samples: int = 100, n_rec: int = 200, n_pt: int = 60,
                 points: int = 50) -> list[PropertyResult]:
    rec = _Recorder("approx")
    ctx = FieldSpec.real(50).ctx

    def run():
        from .cf import cf_expand
        from .reals import parse_real

        for _ in range(samples):
            s = random_limit_spec(rng)
            try:
                lim = recurrence_ratio_limit(s)
            except Exception as exc:  # B1 = 0 exactly with rational sqrt(c)
                rec.check("Binet limit = a_N / b_N", False, (s, exc))
                continue
            a, b = s.sequences(n_rec + 1)
            emp = _mp_fraction(ctx, a[n_rec] / b[n_rec])
            rec.check("Binet limit = a_N / b_N", abs(emp - _mp_exact(ctx, lim)) < ctx.mpf(10) ** -20, (s, lim))

        done = 0
        while done < points:
            params = random_rational_params(rng, irreducible=False)
            p = random_rational_point(rng, params)
            trace = 2 * p.x + params.h * p.y
            if abs(trace) <= 2:
                try:
                    point_ratio_limit(p)
                    rec.check("|2x+hy| <= 2 rejected", False, p)
                except NoConvergenceError:
                    rec.check("|2x+hy| <= 2 rejected", True)
                continue
            if trace < Fraction(5, 2) or params.d == 0:
                continue
            lim = point_ratio_limit(p)
            q = e_pow(p, n_pt)
            emp = _mp_fraction(ctx, q.y / q.x)
            rec.check("y_N/x_N -> closed-form limit", abs(emp - _mp_exact(ctx, lim)) < ctx.mpf(10) ** -15, (p, lim))
            # closed form as printed for positive trace
            h, x, y = params.h, p.x, p.y
            printed = 2 * _mp_fraction(ctx, y) / (ctx.sqrt(_mp_fraction(ctx, h * h * y * y + 4 * h * x * y + 4 * x * x - 4))
                               - _mp_fraction(ctx, h * y))
            rec.check("limit = 2y/(sqrt(h²y²+4hxy+4x²-4) - hy)", abs(printed - _mp_exact(ctx, lim)) < ctx.mpf(10) ** -40, p)
            done += 1

        # continued fraction identities on random targets
        for _ in range(max(1, samples // 5)):
            k = rng.randint(2, 500)
            target = parse_real(f"sqrt({k})+pi/{rng.randint(1, 9)}")
            e = cf_expand(target, 25)
            lo, hi = target.enclosure(60)
            pq = e.convergents
            for i in range(1, len(pq)):
                (p1, q1), (p0, q0) = pq[i], pq[i - 1]
                rec.check("p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1)", p1 * q0 - p0 * q1 == (-1) ** (i - 1), (k, i))
            for i in range(len(pq) - 1):
                (p, q), (_, q_next) = pq[i], pq[i + 1]
                err = max(abs(lo - Fraction(p, q)), abs(hi - Fraction(p, q)))
                rec.check("|x - p_k/q_k| < 1/(q_k q_{k+1})", err < Fraction(1, q * q_next), (k, i))
                below = Fraction(p, q) < lo
                rec.check("convergents alternate", below == (i % 2 == 0), (k, i))

    rec.timed("Binet limit = a_N / b_N", run)
    return list(rec.results.values())


def run_suite(name: str, seed: int = 0, samples: int = 500) -> list[PropertyResult]:
    rng = random.Random(f"{name}:{seed}")
    if name == "group":
        return group_suite(rng, samples)
    if name == "redei":
        return redei_suite(rng, samples)
    if name == "power":
        return power_suite(rng, samples)
    if name == "approx":
        return approx_suite(rng, samples)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
