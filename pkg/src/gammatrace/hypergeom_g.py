"""The p-adic hypergeometric function nGn built from quotients of Gamma_p.

    nGn[a; b | t]_p = -1/(p-1) * sum_{j=0}^{p-2} (-1)^{jn} omegabar^j(t)
        * prod_i Gamma(<a_i - j/(p-1)>)/Gamma(<a_i>) * Gamma(<-b_i + j/(p-1)>)/Gamma(<-b_i>)
        * (-p)^(-floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1)))

Everything except omegabar^j(t) is independent of t, so the per-j coefficients
are computed once per (parameters, p, precision) and cached.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BadParameterDenominator
from .gamma import gamma_frac, gamma_sweep, residues_for
from .padic import (
    PadicNumber,
    RationalLike,
    as_rational,
    check_odd_prime,
    frac_floor,
    teichmuller,
)


def _canonical(xs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(frac_floor(as_rational(x))[0] for x in xs)


@dataclass(frozen=True)
class GParams:
    """Upper parameters a_1..a_n and lower b_1..b_n, stored as fractional parts."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", _canonical(self.upper))
        object.__setattr__(self, "lower", _canonical(self.lower))
        if len(self.upper) != len(self.lower):
            raise ValueError("nGn needs as many lower parameters as upper ones")
        if not self.upper:
            raise ValueError("nGn needs n >= 1")

    @classmethod
    def parse(cls, upper: str, lower: str) -> "GParams":
        """Build from comma separated rationals such as ``"1/4,3/4"``."""
        return cls(
            tuple(Fraction(s.strip()) for s in upper.split(",")),
            tuple(Fraction(s.strip()) for s in lower.split(",")),
        )

    @property
    def n(self) -> int:
        return len(self.upper)

    def check_prime(self, p: int) -> None:
        for x in self.upper + self.lower:
            if x.denominator % p == 0:
                raise BadParameterDenominator(f"parameter {x} is not a {p}-adic integer")

    def __str__(self) -> str:
        return f"[{', '.join(map(str, self.upper))}; {', '.join(map(str, self.lower))}]"


TRACE_PARAMS = GParams((Fraction(1, 4), Fraction(3, 4)), (Fraction(1, 3), Fraction(2, 3)))
G4_PARAMS = GParams(tuple(Fraction(k, 5) for k in range(1, 5)), (0, 0, 0, 0))
P3_PARAMS = GParams((0, 0), (0, Fraction(1, 2)))


@dataclass(frozen=True)
class GValue:
    value: PadicNumber
    prime: int
    params: GParams
    argument: int

    @property
    def valuation(self):
        return self.value.valuation


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def exponents(params: GParams, p: int) -> list[int]:
    """The power of (-p) in the j-th summand, for j = 0..p-2, from exact floors."""
    out = []
    for j in range(p - 1):
        y = Fraction(j, p - 1)
        e = 0
        for a, b in zip(params.upper, params.lower):
            e -= _floor(a - y) + _floor(frac_floor(-b)[0] + y)
        out.append(e)
    return out


def delta_bound(params: GParams, p: int) -> int:
    """min over 0 <= j <= p-2 of #{a: <a> < j/(p-1)} - #{b: <b>* <= j/(p-1)}."""
    params.check_prime(p)
    # <b>* = 1 - <-b>, i.e. <b> unless b is integral, then 1
    bstar = [1 - frac_floor(-b)[0] for b in params.lower]
    best = None
    for j in range(p - 1):
        y = Fraction(j, p - 1)
        f = sum(a < y for a in params.upper) - sum(b <= y for b in bstar)
        best = f if best is None else min(best, f)
    return best


@lru_cache(maxsize=512)
def _kernel(params: GParams, p: int, M: int) -> tuple[tuple[int, int], ...]:
    """(exponent e_j, unit u_j mod p^M) with nGn(t) = sum_j u_j omegabar^j(t) p^e_j."""
    n = params.n
    mod = p**M
    args = []
    for a, b in zip(params.upper, params.lower):
        args += [a, -b]
        for j in range(p - 1):
            y = Fraction(j, p - 1)
            args += [a - y, -b + y]
    table = gamma_sweep(p, M, residues_for(args, p, M, fractional=True))

    def g(x):
        return gamma_frac(x, p, M, table)

    denom = 1
    for a, b in zip(params.upper, params.lower):
        denom = denom * g(a) * g(-b) % mod
    # -1/(p-1) prefactor folded into the common denominator
    scale = -pow(denom * (p - 1), -1, mod)
    out = []
    for j, e in enumerate(exponents(params, p)):
        y = Fraction(j, p - 1)
        u = scale
        for a, b in zip(params.upper, params.lower):
            u = u * g(a - y) * g(-b + y) % mod
        if (j * n + e) % 2:
            u = -u % mod
        out.append((e, u))
    return tuple(out)


def g_eval(params: GParams, t: int, p: int, N: int, guard: int = 0) -> GValue:
    """nGn[params | t]_p for t in F_p.

    The result is exact modulo p^(e_min + N), where e_min >= delta_bound is the
    lowest power of p among the summands; ``guard`` extra digits are carried
    through the Gamma_p sweep. At t = 0 every character value vanishes and the
    result is an exact zero.
    """
    check_odd_prime(p)
    params.check_prime(p)
    t %= p
    if t == 0:
        return GValue(PadicNumber.zero(p), p, params, t)
    M = N + guard
    mod = p**M
    kernel = _kernel(params, p, M)
    wbar = pow(teichmuller(t, p, M), -1, mod)
    by_exp: dict[int, int] = {}
    c = 1
    for e, u in kernel:
        by_exp[e] = (by_exp.get(e, 0) + u * c) % mod
        c = c * wbar % mod
    total = PadicNumber.zero(p)
    for e, s in sorted(by_exp.items()):
        total = total + PadicNumber.from_unit(s, e, p, M)
    e_min = min(by_exp)
    return GValue(total.with_absprec(e_min + N), p, params, t)


def g_eval_rational(params: GParams, t: RationalLike, p: int, N: int, guard: int = 0) -> GValue:
    """As g_eval, with a rational argument reduced into F_p first."""
    t = as_rational(t)
    if t.denominator % p == 0:
        raise ZeroDivisionError(f"argument {t} is not defined in F_{p}")
    return g_eval(params, t.numerator * pow(t.denominator, -1, p), p, N, guard)


def g4_modular(p: int, N: int) -> GValue:
    return g_eval(G4_PARAMS, 1, p, N)


def p3_value(a: int, b: int, N: int) -> GValue:
    """2G2[0, 0; 0, 1/2 | -a/b]_3."""
    return g_eval(P3_PARAMS, -a * pow(b, -1, 3), 3, N)


def observed_valuations(params: GParams, p: int, N: int, ts: Sequence[int] | None = None) -> list:
    ts = range(1, p) if ts is None else ts
    return [g_eval(params, t, p, N).valuation for t in ts]
