"""Finite-field hypergeometric functions n+1Fn in the normalized Gauss-sum form.

Characters are exponent indices: an index k stands for omegabar^k. The
character sum is evaluated in the pi-ring with Gross-Koblitz Gauss sums, and
the constant denominator prod g(A_i) prod g(Bbar_j) is a monomial c*pi^e
that is divided out exactly by multiplying with pi^(q(p-1) - e) and dividing
by (-p)^q, q = ceil(e/(p-1)).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import WrongCongruenceClass
from .elliptic import check_short_curve
from .gauss import PiRingElement, all_gauss_sums
from .hypergeom_g import GParams
from .padic import INF, PadicNumber, centered_lift, check_odd_prime, omega_power


@dataclass(frozen=True)
class CharTuple:
    """A_0..A_n = omegabar^upper_indices, B_1..B_n = omegabar^lower_indices."""

    upper_indices: tuple[int, ...]
    lower_indices: tuple[int, ...]
    prime: int

    def __post_init__(self):
        d = self.prime - 1
        object.__setattr__(self, "upper_indices", tuple(k % d for k in self.upper_indices))
        object.__setattr__(self, "lower_indices", tuple(k % d for k in self.lower_indices))
        if len(self.upper_indices) != len(self.lower_indices) + 1:
            raise ValueError("n+1Fn needs one more upper character than lower ones")

    @property
    def n(self) -> int:
        return len(self.lower_indices)

    def order(self, k: int) -> int:
        return (self.prime - 1) // gcd(k, self.prime - 1)

    def to_gparams(self) -> GParams:
        """Parameters of the matching n+1Gn+1: a_i = index/(p-1) with a lower 0 prepended."""
        d = self.prime - 1
        return GParams(
            tuple(Fraction(k, d) for k in self.upper_indices),
            (Fraction(0),) + tuple(Fraction(k, d) for k in self.lower_indices),
        )


def f_eval(chars: CharTuple, x: int, p: int, N: int) -> PadicNumber:
    """n+1Fn(A; B | x)_p, exact modulo p^N (absolute).

    1/(p-1) sum_chi prod_i g(A_i chi)/g(A_i) prod_j g(Bbar_j chibar)/g(Bbar_j) g(chibar) chi(-1)^(n+1) chi(x)
    """
    check_odd_prime(p)
    if chars.prime != p:
        raise ValueError("character tuple belongs to another prime")
    x %= p
    if x == 0:
        return PadicNumber.zero(p)
    d = p - 1
    n = chars.n
    # denominator monomial: exponent is the sum of the omegabar indices
    e = sum(chars.upper_indices) + sum((-k) % d for k in chars.lower_indices)
    q = -(-e // d)
    M = N + q
    mod = p**M
    gs = all_gauss_sums(p, M)

    denom_unit = 1
    for k in chars.upper_indices:
        denom_unit = denom_unit * gs[k].unit % mod
    for k in chars.lower_indices:
        denom_unit = denom_unit * gs[-k % d].unit % mod

    acc = PiRingElement.zero(p, M)
    for c in range(d):
        # chi = omega^c = omegabar^(-c)
        term = gs[c].value  # g(chibar) = g(omegabar^c)
        for k in chars.upper_indices:
            term = term * gs[(k - c) % d].value
        for k in chars.lower_indices:
            term = term * gs[(c - k) % d].value
        weight = omega_power(-1, c * (n + 1), p, M) * omega_power(x, c, p, M) % mod
        acc = acc + term.scale(weight)
    # multiply by pi^(q d - e) / ((-p)^q * denom_unit * (p - 1))
    acc = acc * PiRingElement.monomial(1, q * d - e, p, M)
    c0 = acc.rational_part()
    total = PadicNumber.from_unit(c0, 0, p, M) / PadicNumber.from_unit(
        denom_unit * (p - 1) * (-1) ** q % mod, 0, p, M
    )
    return total * PadicNumber(p, INF, -q, 1)


def lennon_chars(p: int, k: int = 1) -> CharTuple:
    """(psi, psi^5; eps) with psi = omega^(k(p-1)/12)."""
    if (p - 1) % 12:
        raise WrongCongruenceClass(f"p = {p} is not 1 mod 12")
    c = k * (p - 1) // 12
    return CharTuple((-c, -5 * c), (0,), p)


def lennon_value(a: int, b: int, p: int, N: int, k: int = 1) -> int:
    bound = isqrt(4 * p)
    while p**N <= 2 * bound:
        N += 1
    c = k * (p - 1) // 12
    arg = (4 * a**3 + 27 * b * b) * pow(4 * a**3, -1, p) % p
    F = f_eval(lennon_chars(p, k), arg, p, N)
    # psi^3(-a^3/27)
    pre = omega_power(-(a**3) * pow(27, -1, p), 3 * c, p, N)
    return centered_lift(F * pre, bound)


def lennon_trace(a: int, b: int, p: int, N: int = 2) -> tuple[int, dict[int, int]]:
    """a_p = psi^3(-a^3/27) 2F1(psi, psi^5; eps | (4a^3+27b^2)/4a^3) for p = 1 mod 12.

    Returns the value for the canonical psi = omega^((p-1)/12) and a map from
    every order-12 choice k in {1, 5, 7, 11} (psi = omega^(k(p-1)/12)) to its value.
    """
    if (p - 1) % 12:
        raise WrongCongruenceClass(f"p = {p} is not 1 mod 12")
    check_short_curve(a, b, p)
    report = {k: lennon_value(a, b, p, N, k) for k in (1, 5, 7, 11)}
    return report[1], report


def f4_chars(p: int) -> CharTuple:
    if (p - 1) % 5:
        raise WrongCongruenceClass(f"p = {p} is not 1 mod 5")
    c = (p - 1) // 5
    # chi5^i = omega^(ic) = omegabar^(-ic)
    return CharTuple(tuple(-i * c for i in range(1, 5)), (0, 0, 0), p)


def f4_modular(p: int, N: int = 2) -> PadicNumber:
    """4F3(chi5, chi5^2, chi5^3, chi5^4; eps, eps, eps | 1)_p for p = 1 mod 5."""
    return f_eval(f4_chars(p), 1, p, N)
