"""Theorem checks across ranges of primes and curves, emitted as report records.

Every runner returns a list of :class:`Record`; per-record mismatches are data,
never exceptions. Records come out in a fixed order for fixed inputs and seed.
"""
from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from . import gamma as gm
from .elliptic import (
    AdmissibleTransform,
    WeierstrassCurve,
    a3_special,
    admissible_short_curves,
    ap_enumerate,
    ap_legendre_sum,
    apply_transform,
    check_short_curve,
    invariants,
)
from .errors import ExcludedJInvariant, GammaTraceError, NotPIntegral, SingularCurve
from .gauss import (
    PiRingElement,
    ap_via_gauss,
    count_zeros,
    hasse_davenport_sides,
    point_count_via_theta,
    product_rule_sides,
    theta_table,
)
from .hypergeom_f import f4_modular, f_eval, lennon_chars, lennon_trace
from .hypergeom_g import TRACE_PARAMS, GParams, delta_bound, g4_modular, g_eval
from .modforms import build_f, coefficient
from .padic import centered_lift, legendre, omega_power, primes_between

ENUMERATION_LIMIT = 31
GAUSS_LIMIT = 13


# -- the headline formulas ----------------------------------------------------


def hasse_bound(p: int) -> int:
    return isqrt(4 * p)


def _digits_for_window(p: int, bound: int, N: int) -> int:
    while p**N <= 2 * bound:
        N += 1
    return N


def trace_via_g(a: int, b: int, p: int, N: int = 2) -> int:
    """a_p = phi(b) * p * 2G2[1/4, 3/4; 1/3, 2/3 | -27b^2/(4a^3)]_p."""
    check_short_curve(a, b, p)
    bound = hasse_bound(p)
    N = _digits_for_window(p, bound, N)
    t = -27 * b * b * pow(4 * a**3, -1, p) % p
    value = g_eval(TRACE_PARAMS, t, p, N).value * (legendre(b, p) * p)
    if value.valuation < 0:
        raise NotPIntegral(f"p * 2G2 has valuation {value.valuation}")
    return centered_lift(value, bound)


def trace_via_c6(E: WeierstrassCurve, N: int = 2) -> int:
    """a_p = phi(-6 c6) * p * 2G2[1/4, 3/4; 1/3, 2/3 | 1 - 1728/j]_p, for any model."""
    p = E.p
    if p <= 3:
        raise ValueError("the trace formulas need p > 3")
    inv = invariants(E)
    if inv.delta == 0:
        raise SingularCurve(f"{E} is singular")
    if inv.j == 0 or inv.j == 1728 % p:
        raise ExcludedJInvariant(f"j = {inv.j}")
    bound = hasse_bound(p)
    N = _digits_for_window(p, bound, N)
    t = (1 - 1728 * pow(inv.j, -1, p)) % p
    value = g_eval(TRACE_PARAMS, t, p, N).value * (legendre(-6 * inv.c6, p) * p)
    if value.valuation < 0:
        raise NotPIntegral(f"p * 2G2 has valuation {value.valuation}")
    return centered_lift(value, bound)


# -- records ------------------------------------------------------------------


@dataclass
class Record:
    task: str
    prime: int
    subject: str
    lhs: str
    rhs: str
    match: bool
    valuation: int | None = None
    extra: dict = field(default_factory=dict)
    elapsed: float | None = None

    def as_dict(self, timing: bool = False) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("elapsed")
        if not d["extra"]:
            d.pop("extra")
        if d["valuation"] is None:
            d.pop("valuation")
        return d


def overall_pass(records: Iterable[Record]) -> bool:
    return all(r.match for r in records)


def summary(task: str, records: Sequence[Record], **meta) -> dict:
    bad = sum(not r.match for r in records)
    out = {"summary": True, "task": task, "records": len(records), "mismatches": bad}
    out.update(meta)
    out["status"] = "pass" if bad == 0 else "fail"
    return out


def to_jsonl(records: Sequence[Record], summ: dict, timing: bool = False) -> str:
    lines = [json.dumps(r.as_dict(timing)) for r in records]
    lines.append(json.dumps(summ))
    return "\n".join(lines) + "\n"


def to_csv(records: Sequence[Record], timing: bool = False) -> str:
    buf = io.StringIO()
    cols = ["task", "prime", "subject", "lhs", "rhs", "match", "valuation", "extra"]
    if timing:
        cols.append("elapsed")
    w = csv.DictWriter(buf, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in records:
        row = asdict(r)
        row["extra"] = json.dumps(row["extra"]) if row["extra"] else ""
        w.writerow(row)
    return buf.getvalue()


def _timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def _mismatch(task, p, subject, exc: Exception) -> Record:
    return Record(task, p, subject, f"error: {type(exc).__name__}: {exc}", "", False)


# -- main theorem -------------------------------------------------------------


def _seed_for(seed: int, p: int) -> int:
    return seed * 1_000_003 + p


def trace_curves(p: int, sample: int | None, seed: int) -> list[tuple[int, int]]:
    curves = admissible_short_curves(p)
    if sample is None or sample >= len(curves):
        return curves
    rng = random.Random(_seed_for(seed, p))
    return sorted(rng.sample(curves, sample))


def _trace_prime(args) -> list[Record]:
    p, sample, seed, N = args
    out = []
    for a, b in trace_curves(p, sample, seed):
        subject = f"y^2=x^3+{a}*x+{b}"
        try:
            lhs, dt = _timed(trace_via_g, a, b, p, N)
        except GammaTraceError as exc:
            out.append(_mismatch("trace", p, subject, exc))
            continue
        rhs = ap_legendre_sum(a, b, p)
        extra = {"c6": trace_via_c6(WeierstrassCurve.short(a, b, p), N)}
        ok = lhs == rhs == extra["c6"] and lhs * lhs <= 4 * p
        if p <= GAUSS_LIMIT:
            extra["gauss"] = ap_via_gauss(a, b, p, N)
            ok = ok and extra["gauss"] == lhs
        if p <= ENUMERATION_LIMIT:
            enum = ap_enumerate(WeierstrassCurve.short(a, b, p))
            extra["enumerate"] = enum
            ok = ok and enum == lhs
        out.append(Record("trace", p, subject, str(lhs), str(rhs), ok, extra=extra, elapsed=dt))
    return out


def verify_range(
    p_min: int,
    p_max: int,
    sample: int | None = None,
    seed: int = 0,
    N: int = 2,
    workers: int = 1,
) -> list[Record]:
    """trace_via_g against the Legendre-sum oracle (and enumeration for p <= 31).

    ``sample=None`` is exhaustive; otherwise ``sample`` seeded-random admissible
    curves per prime.
    """
    primes = primes_between(max(p_min, 5), p_max)
    jobs = [(p, sample, seed, N) for p in primes]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_trace_prime, jobs))
    else:
        chunks = [_trace_prime(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]


def random_transform(p: int, rng: random.Random) -> AdmissibleTransform:
    return AdmissibleTransform(rng.randrange(1, p), rng.randrange(p), rng.randrange(p), rng.randrange(p))


def verify_corollary(
    primes: Sequence[int], curves: int = 10, transforms: int = 20, seed: int = 0, N: int = 2
) -> list[Record]:
    """trace_via_c6 on random models of random curves: invariant and equal to enumeration."""
    out = []
    for p in primes:
        rng = random.Random(_seed_for(seed, p))
        pool = admissible_short_curves(p)
        for a, b in sorted(rng.sample(pool, min(curves, len(pool)))):
            E = WeierstrassCurve.short(a, b, p)
            base = trace_via_c6(E, N)
            for _ in range(transforms):
                T = random_transform(p, rng)
                F = apply_transform(E, T)
                lhs = trace_via_c6(F, N)
                rhs = ap_enumerate(F)
                out.append(
                    Record(
                        "corollary", p, f"{F} from y^2=x^3+{a}*x+{b}", str(lhs), str(rhs),
                        lhs == rhs == base and lhs * lhs <= 4 * p,
                        extra={"short_form_value": base, "transform": [T.u, T.r, T.s, T.t]},
                    )
                )
    return out


def verify_anchor(N: int = 2) -> list[Record]:
    """y^2 = x^3 + x + 1 over F_5 by enumeration, Legendre sum and the 2G2 formula."""
    p, a, b = 5, 1, 1
    E = WeierstrassCurve.short(a, b, p)
    enum, leg, via_g = ap_enumerate(E), ap_legendre_sum(a, b, p), trace_via_g(a, b, p, N)
    G = g_eval(TRACE_PARAMS, 2, p, N).value
    lifted = centered_lift(G * p, hasse_bound(p))
    return [
        Record("anchor", p, "routes", f"{enum},{leg},{via_g}", "-3", enum == leg == via_g == -3),
        Record(
            "anchor", p, "2G2[1/4,3/4;1/3,2/3|2]", str(lifted), "-3",
            G.valuation == -1 and lifted == -3, valuation=G.valuation,
        ),
    ]


# -- identity suites ----------------------------------------------------------


def _pair(task, p, subject, lhs, rhs, **kw) -> Record:
    return Record(task, p, subject, str(lhs), str(rhs), lhs == rhs, **kw)


def verify_gamma_identities(p_max: int = 97, lemma_p_max: int = 31, N: int = 2) -> list[Record]:
    out = []
    for p in primes_between(3, p_max):
        for m in (2, 3, 4, 6):
            if m % p == 0:
                continue
            xs = gm.multiplication_arguments(p, m)
            table = gm.table_for(p, N, xs + [1 - x for x in xs])
            for r in range(p):
                out.append(_pair("gamma-multiplication", p, f"m={m} x={r}/{p - 1}", *gm.multiplication_sides(r, m, p, N, table)))
            if m == 2:
                for r in range(p):
                    out.append(_pair("gamma-reflection", p, f"x={r}/{p - 1}", *gm.reflection_sides(Fraction(r, p - 1), p, N, table)))
        if p > lemma_p_max:
            continue
        for t in (2, 3, 4, 6):
            if t % p == 0:
                continue
            table = gm.table_for(p, N, gm.lemma_arguments(p, t))
            for j in range(p - 1):
                for mirrored in (False, True):
                    name = "gamma-lemma-mirrored" if mirrored else "gamma-lemma"
                    out.append(_pair(name, p, f"t={t} j={j}", *gm.lemma_sides(j, t, p, N, table, mirrored)))
    return out


def verify_orthogonality(p_max: int = 31, N: int = 2) -> list[Record]:
    out = []
    for p in primes_between(3, p_max):
        mod = p**N
        for j in range(p - 1):
            s = sum(omega_power(x, j, p, N) for x in range(p)) % mod
            out.append(_pair("orthogonality-elements", p, f"j={j}", s, (p - 1) if j == 0 else 0))
        for x in range(1, p):
            s = sum(omega_power(x, j, p, N) for j in range(p - 1)) % mod
            out.append(_pair("orthogonality-characters", p, f"x={x}", s, (p - 1) if x == 1 else 0))
    return out


def verify_gauss_ring(p_max: int = 31, N: int = 2) -> list[Record]:
    out = []
    for p in primes_between(3, p_max):
        pi = PiRingElement.monomial(1, 1, p, N)
        power = PiRingElement.constant(1, p, N)
        for _ in range(p - 1):
            power = power * pi
        out.append(_pair("pi-relation", p, "pi^(p-1)+p", power + PiRingElement.constant(p, p, N), PiRingElement.zero(p, N)))
        for j in range(p - 1):
            out.append(_pair("gauss-product", p, f"j={j}", *product_rule_sides(j, p, N)))
        for m in (2, 3, 4, 6):
            if (p - 1) % m:
                continue
            for s in range(p - 1):
                out.append(_pair("hasse-davenport", p, f"m={m} psi=omega^{s}", *hasse_davenport_sides(m, s, p, N)))
        theta = theta_table(p, N)
        total = PiRingElement.zero(p, N)
        for th in theta:
            total = total + th
        out.append(_pair("theta-sum", p, "sum_x theta(x)", total, PiRingElement.zero(p, N)))
        bad = [(x, y) for x in range(1, p) for y in range(1, p) if theta[x] * theta[y] != theta[(x + y) % p]]
        out.append(Record("theta-multiplicative", p, "theta(a)theta(b)=theta(a+b), a,b != 0",
                          str(len(bad)), "0", not bad, extra={"failures": bad[:5]} if bad else {}))
    return out


def curve_polynomial(a: int, b: int) -> dict:
    """x1^3 + a x1 + b - x2^2."""
    return {(3, 0): 1, (1, 0): a, (0, 0): b, (0, 2): -1}


def verify_point_counts(primes: Sequence[int] = (5, 7, 11, 13), N: int = 2) -> list[Record]:
    out = []
    for p in primes:
        for a in range(p):
            for b in range(p):
                if (4 * a**3 + 27 * b * b) % p == 0:
                    continue
                f = curve_polynomial(a, b)
                out.append(_pair("theta-point-count", p, f"y^2=x^3+{a}*x+{b}", point_count_via_theta(f, p, N), count_zeros(f, p)))
    return out


def verify_ap_gauss(primes: Sequence[int] = (5, 7, 11, 13), N: int = 2) -> list[Record]:
    out = []
    for p in primes:
        for a, b in admissible_short_curves(p):
            lhs = ap_via_gauss(a, b, p, N)
            rhs = ap_enumerate(WeierstrassCurve.short(a, b, p))
            out.append(Record("ap-gauss", p, f"y^2=x^3+{a}*x+{b}", str(lhs), str(rhs), lhs == rhs and lhs * lhs <= 4 * p))
    return out


def verify_identities(p_max: int = 31, N: int = 2) -> list[Record]:
    return (
        verify_gamma_identities(p_max, p_max, N)
        + verify_orthogonality(p_max, N)
        + verify_gauss_ring(p_max, N)
    )


# -- finite-field hypergeometric side -------------------------------------------


def verify_lemma_gf(primes: Sequence[int] = (13, 37, 61), count: int = 10, seed: int = 0, N: int = 2) -> list[Record]:
    """f_eval(Lennon data, t) against g_eval(mapped parameters, 1/t)."""
    out = []
    for p in primes:
        rng = random.Random(_seed_for(seed, p))
        chars = lennon_chars(p)
        params = chars.to_gparams()
        for t in sorted(rng.sample(range(1, p), min(count, p - 1))):
            F = f_eval(chars, t, p, N)
            G = g_eval(params, pow(t, -1, p), p, N).value
            out.append(Record("lemma-gf", p, f"t={t} G{params}", str(F), str(G), F.congruent(G), valuation=G.valuation))
    return out


def verify_lennon(
    primes: Sequence[int] = (13, 37, 61, 73, 97), sample: int = 25, seed: int = 0, N: int = 2,
    exhaustive_limit: int = 13,
) -> list[Record]:
    out = []
    for p in primes:
        curves = trace_curves(p, None if p <= exhaustive_limit else sample, seed)
        for a, b in curves:
            value, choices = lennon_trace(a, b, p, N)
            rhs = ap_enumerate(WeierstrassCurve.short(a, b, p))
            agree = sorted(k for k, v in choices.items() if v == rhs)
            out.append(
                Record("lennon", p, f"y^2=x^3+{a}*x+{b}", str(value), str(rhs), value == rhs and value * value <= 4 * p,
                       extra={"psi_choices": {str(k): v for k, v in choices.items()}, "agreeing": agree})
            )
    return out


# -- modular forms ------------------------------------------------------------


def deligne_bound(p: int) -> int:
    """floor(2 p^(3/2))."""
    return isqrt(4 * p**3)


def verify_modform(p_max: int = 47, M: int = 60, N: int = 2) -> list[Record]:
    f = build_f(M)
    out = []
    for p in primes_between(3, p_max):
        if p == 5:
            continue
        cp = coefficient(f, p)
        bound = deligne_bound(p)
        Np = _digits_for_window(p, bound, N)
        G = g4_modular(p, Np).value
        lhs = centered_lift(G - legendre(5, p) * p, bound)
        out.append(Record("modform-g4", p, "4G4[1/5..4/5;0,0,0,0|1] - (5/p)p", str(lhs), str(cp), lhs == cp, valuation=G.valuation))
        if p % 5 == 1:
            F = f4_modular(p, Np)
            lhs_f = centered_lift(F - p, bound)
            out.append(Record("modform-f4", p, "4F3(chi5..chi5^4;eps,eps,eps|1) - p", str(lhs_f), str(cp),
                              lhs_f == cp and F.congruent(G), extra={"agrees_with_g4": F.congruent(G)}))
    return out


def verify_p3(N: int = 2) -> list[Record]:
    out = []
    for a in (1, 2):
        for b in (1, 2):
            chk = a3_special(a, b, N)
            out.append(Record("p3", 3, f"y^2=x^3+{a}*x^2+{b}", str(chk.formula), str(chk.enumerated), chk.match))
    return out


# -- valuation bound ------------------------------------------------------------


def random_params(rng: random.Random, max_n: int = 4, max_den: int = 6) -> GParams:
    n = rng.randint(1, max_n)

    def one():
        d = rng.randint(1, max_den)
        return Fraction(rng.randrange(d), d)

    return GParams(tuple(one() for _ in range(n)), tuple(one() for _ in range(n)))


def verify_delta(count: int = 100, seed: int = 0, p_max: int = 53, ts_per_set: int = 3, N: int = 2) -> list[Record]:
    """valuation(g_eval) >= delta_bound for random parameter sets, primes and arguments."""
    rng = random.Random(seed)
    primes = primes_between(3, p_max)
    out = []
    for _ in range(count):
        params = random_params(rng)
        dens = [x.denominator for x in params.upper + params.lower]
        ok_primes = [p for p in primes if all(d % p for d in dens)]
        p = rng.choice(ok_primes)
        delta = delta_bound(params, p)
        for t in sorted(rng.sample(range(1, p), min(ts_per_set, p - 1))):
            v = g_eval(params, t, p, N).valuation
            out.append(Record("delta-bound", p, f"G{params} t={t}", str(v), str(delta), v >= delta,
                              valuation=None if v == float("inf") else v, extra={"tight": v == delta}))
    return out


TASKS = {
    "anchor": verify_anchor,
    "corollary": verify_corollary,
    "identities": verify_identities,
    "gamma": verify_gamma_identities,
    "gauss": verify_gauss_ring,
    "point-count": verify_point_counts,
    "ap-gauss": verify_ap_gauss,
    "lemma-gf": verify_lemma_gf,
    "lennon": verify_lennon,
    "modform": verify_modform,
    "p3": verify_p3,
    "delta": verify_delta,
}
