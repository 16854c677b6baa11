"""Command-line entry point: ``gammatrace <command> ...`` or ``python -m gammatrace``.

Exit status: 0 when every check matches, 1 on any mismatch, 2 on bad usage.
The default p-adic precision comes from GAMMATRACE_PREC (2 if unset).
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import verify as vf
from .elliptic import (
    WeierstrassCurve,
    ap_enumerate,
    ap_legendre_sum,
    invariants,
    to_short_form,
)
from .errors import GammaTraceError
from .gamma import gamma_value, table_for
from .gauss import ap_via_gauss
from .hypergeom_f import CharTuple, f_eval
from .hypergeom_g import GParams, g_eval
from .modforms import DEFAULT_TRUNCATION, build_f, coefficient
from .padic import check_odd_prime, primes_between

PREC_ENV = "GAMMATRACE_PREC"


class UsageError(Exception):
    pass


def default_prec() -> int:
    raw = os.environ.get(PREC_ENV, "2")
    try:
        N = int(raw)
    except ValueError:
        raise UsageError(f"{PREC_ENV}={raw!r} is not an integer")
    if N < 1:
        raise UsageError(f"{PREC_ENV} must be positive")
    return N


def int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def p_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")


def parse_curve(coeffs: list[int], p: int) -> WeierstrassCurve:
    if len(coeffs) == 2:
        return WeierstrassCurve.short(coeffs[0], coeffs[1], p)
    if len(coeffs) == 5:
        return WeierstrassCurve(p, *coeffs)
    raise UsageError("--curve takes A,B or A1,A2,A3,A4,A6")


# -- single computations -------------------------------------------------------


def cmd_gamma(args) -> int:
    check_odd_prime(args.p)
    x = Fraction(args.x)
    table = table_for(args.p, args.prec, [x])
    print(gamma_value(x, args.p, args.prec, table))
    return 0


def cmd_g_eval(args) -> int:
    params = GParams.parse(args.upper, args.lower)
    res = g_eval(params, args.t, args.p, args.prec, args.guard)
    v = res.value
    print(f"G{params} t={res.argument} p={args.p}")
    print(f"valuation {v.valuation}")
    print(f"unit {v.unit}")
    print(f"value {v}")
    return 0


def cmd_ap(args) -> int:
    p = args.p
    E = parse_curve(args.curve, p)
    if args.method == "enumerate":
        print(ap_enumerate(E))
        return 0
    if args.method == "c6":
        print(vf.trace_via_c6(E, args.prec))
        return 0
    # the remaining routes are stated for short models
    if len(args.curve) == 2:
        a, b = args.curve
    else:
        a, b, _ = to_short_form(E)
    if args.method == "legendre":
        print(ap_legendre_sum(a, b, p))
    elif args.method == "gauss":
        print(ap_via_gauss(a, b, p, args.prec))
    else:
        print(vf.trace_via_g(a, b, p, args.prec))
    return 0


def cmd_invariants(args) -> int:
    inv = invariants(parse_curve(args.curve, args.p))
    for name in ("b2", "b4", "b6", "b8", "c4", "c6", "delta", "j"):
        value = getattr(inv, name)
        print(f"{name} {'singular' if value is None else value}")
    return 0


def cmd_f_eval(args) -> int:
    chars = CharTuple(tuple(args.upper), tuple(args.lower), args.p)
    print(f_eval(chars, args.x, args.p, args.prec))
    return 0


def cmd_modform(args) -> int:
    M = max(args.truncation, args.n)
    print(coefficient(build_f(M), args.n))
    return 0


# -- verification suites ---------------------------------------------------------


def run_suite(args) -> list:
    t, N = args.task, args.prec
    if t == "trace":
        lo, hi = args.p_range
        sample = None if args.exhaustive or args.sample is None else args.sample
        return vf.verify_range(lo, hi, sample, args.seed, N, args.workers)
    if t == "identities":
        return vf.verify_identities(args.p_max, N)
    if t == "gamma":
        return vf.verify_gamma_identities(args.p_max, args.lemma_p_max, N)
    if t == "gauss":
        return (
            vf.verify_orthogonality(args.p_max, N)
            + vf.verify_gauss_ring(args.p_max, N)
            + vf.verify_point_counts(args.primes, N)
            + vf.verify_ap_gauss(args.primes, N)
        )
    if t == "corollary":
        lo, hi = args.p_range
        return vf.verify_corollary(primes_between(max(lo, 5), hi), args.curves, args.transforms, args.seed, N)
    if t == "modform":
        return vf.verify_modform(args.p_max, args.truncation, N)
    if t == "lemma-gf":
        return vf.verify_lemma_gf(args.primes, args.count, args.seed, N)
    if t == "lennon":
        return vf.verify_lennon(args.primes, args.sample, args.seed, N)
    if t == "p3":
        return vf.verify_p3(N)
    if t == "delta":
        return vf.verify_delta(args.count, args.seed, args.p_max, N=N)
    return vf.verify_anchor(N)


def suite_meta(args) -> dict:
    meta = {"prec": args.prec}
    for name in ("p_range", "p_max", "primes", "seed", "sample", "count"):
        if hasattr(args, name):
            value = getattr(args, name)
            meta[name] = list(value) if isinstance(value, (tuple, list)) else value
    if getattr(args, "exhaustive", False):
        meta["sample"] = None
    return meta


def cmd_verify(args) -> int:
    records = run_suite(args)
    summ = vf.summary(args.task, records, **suite_meta(args))
    if args.csv:
        text = vf.to_csv(records, args.timing)
    elif args.json:
        text = vf.to_jsonl(records, summ, args.timing)
    else:
        lines = [
            f"{'ok ' if r.match else 'BAD'} {r.task} p={r.prime} {r.subject}: {r.lhs} vs {r.rhs}"
            for r in records
            if args.verbose or not r.match
        ]
        lines.append(f"{args.task}: {summ['records']} records, {summ['mismatches']} mismatches, {summ['status']}")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if summ["status"] == "pass" else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gammatrace", description="p-adic hypergeometric traces of Frobenius")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_prec(p):
        p.add_argument("--prec", type=int, default=None, help=f"p-adic digits (default ${PREC_ENV} or 2)")
        return p

    g = with_prec(sub.add_parser("gamma", help="Morita Gamma_p(x) mod p^N"))
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--x", required=True, help="rational NUM/DEN with p-free denominator")
    g.set_defaults(func=cmd_gamma)

    g = with_prec(sub.add_parser("g-eval", help="nGn[upper; lower | t]_p"))
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--upper", required=True, help="e.g. 1/4,3/4")
    g.add_argument("--lower", required=True, help="e.g. 1/3,2/3")
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--guard", type=int, default=0, help="extra digits carried through the sweep")
    g.set_defaults(func=cmd_g_eval)

    g = with_prec(sub.add_parser("ap", help="trace of Frobenius of a curve"))
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--curve", type=int_list, required=True, help="A,B or A1,A2,A3,A4,A6")
    g.add_argument("--method", choices=["g", "c6", "gauss", "enumerate", "legendre"], default="g")
    g.set_defaults(func=cmd_ap)

    g = sub.add_parser("invariants", help="b- and c-invariants, discriminant and j")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--curve", type=int_list, required=True)
    g.set_defaults(func=cmd_invariants)

    g = with_prec(sub.add_parser("f-eval", help="n+1Fn over F_p; characters as omegabar exponents"))
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--upper", type=int_list, required=True, help="omegabar exponents; write --upper=-1,-5 for negatives")
    g.add_argument("--lower", type=int_list, required=True)
    g.add_argument("--x", type=int, required=True)
    g.set_defaults(func=cmd_f_eval)

    g = sub.add_parser("modform", help="coefficients of the level 25 weight 4 form")
    msub = g.add_subparsers(dest="what", required=True)
    c = msub.add_parser("coeff")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--truncation", type=int, default=DEFAULT_TRUNCATION)
    c.set_defaults(func=cmd_modform)

    g = sub.add_parser("verify", help="run a verification suite and report")
    vsub = g.add_subparsers(dest="task", required=True)

    def suite(name, help_text, **defaults):
        s = with_prec(vsub.add_parser(name, help=help_text))
        out = s.add_mutually_exclusive_group()
        out.add_argument("--json", action="store_true", help="JSON lines plus a summary line")
        out.add_argument("--csv", action="store_true")
        s.add_argument("--output", help="write the report here instead of stdout")
        s.add_argument("--timing", action="store_true", help="include elapsed seconds (breaks byte-identity)")
        s.add_argument("-v", "--verbose", action="store_true", help="list matching records too")
        for key, value in defaults.items():
            flag = "--" + key.replace("_", "-")
            if key == "primes":
                s.add_argument(flag, type=int_list, default=list(value))
            elif key == "p_range":
                s.add_argument(flag, type=p_range, default=value, help="LO..HI")
            else:
                s.add_argument(flag, type=int, default=value)
        s.set_defaults(func=cmd_verify)
        return s

    s = suite("trace", "2G2 trace formula against point counts", p_range=(5, 97), seed=0, workers=1)
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="every admissible curve (default)")
    mode.add_argument("--sample", type=int, help="K seeded-random curves per prime")
    suite("identities", "Gamma_p identities, orthogonality, pi-ring Gauss sum relations", p_max=31)
    suite("gamma", "Gamma_p reflection, multiplication and lemma identities", p_max=97, lemma_p_max=31)
    suite("gauss", "Gauss sums, theta reconstruction, point counts and the Gauss-sum trace",
          p_max=31, primes=(5, 7, 11, 13))
    suite("corollary", "c6 formula on random models", p_range=(5, 31), curves=10, transforms=20, seed=0)
    suite("modform", "4G4 and 4F3 against c(p)", p_max=47, truncation=DEFAULT_TRUNCATION)
    suite("lemma-gf", "2F1 against 3G3 at the inverse argument", primes=(13, 37, 61), count=10, seed=0)
    suite("lennon", "2F1 trace formula for p = 1 mod 12", primes=(13, 37, 61, 73, 97), sample=25, seed=0)
    suite("p3", "the p = 3 family y^2 = x^3 + ax^2 + b")
    suite("delta", "valuation lower bound on random parameters", count=100, seed=0, p_max=53)
    suite("anchor", "y^2 = x^3 + x + 1 over F_5")
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "prec") and args.prec is None:
            args.prec = default_prec()
        if getattr(args, "prec", 1) < 1:
            raise UsageError("--prec must be positive")
        return args.func(args)
    except (UsageError, GammaTraceError, ValueError, ZeroDivisionError) as exc:
        print(f"gammatrace: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
