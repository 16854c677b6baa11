"""Arithmetic in Z_p[pi]/(pi^(p-1) + p) and Gauss sums via Gross-Koblitz.

The additive character is never built from a p-th root of unity. It only
exists through its expansion theta(x) = 1/(p-1) sum_j g(omegabar^j) omega^j(x),
which is a polynomial in pi of degree p-2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import isqrt
from typing import Mapping, Sequence

from .elliptic import check_short_curve
from .errors import IndexOutOfRange, MixedRings, NonRationalResult
from .gamma import GammaTable, gamma_value, gauss_table
from .padic import PadicNumber, centered_lift, check_odd_prime, legendre, omega_power


@dataclass(frozen=True)
class PiRingElement:
    """sum_k coeffs[k] pi^k with coefficients mod p^precision and pi^(p-1) = -p."""

    prime: int
    precision: int
    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, p: int, N: int) -> "PiRingElement":
        return cls(p, N, (0,) * (p - 1))

    @classmethod
    def constant(cls, c: int, p: int, N: int) -> "PiRingElement":
        return cls.monomial(c, 0, p, N)

    @classmethod
    def monomial(cls, c: int, k: int, p: int, N: int) -> "PiRingElement":
        """c * pi^k for k >= 0, folded into degree < p-1."""
        if k < 0:
            raise ValueError("negative powers of pi are not ring elements")
        q, r = divmod(k, p - 1)
        mod = p**N
        coeffs = [0] * (p - 1)
        coeffs[r] = c * (-p) ** q % mod
        return cls(p, N, tuple(coeffs))

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def _check(self, other: "PiRingElement") -> None:
        if not isinstance(other, PiRingElement):
            raise MixedRings(f"cannot combine PiRingElement with {type(other).__name__}")
        if other.prime != self.prime or other.precision != self.precision:
            raise MixedRings(
                f"p={self.prime}, N={self.precision} vs p={other.prime}, N={other.precision}"
            )

    def __add__(self, other: "PiRingElement") -> "PiRingElement":
        self._check(other)
        mod = self.modulus
        return PiRingElement(
            self.prime, self.precision, tuple((x + y) % mod for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "PiRingElement":
        mod = self.modulus
        return PiRingElement(self.prime, self.precision, tuple(-x % mod for x in self.coeffs))

    def __sub__(self, other: "PiRingElement") -> "PiRingElement":
        return self + (-other)

    def scale(self, c: int) -> "PiRingElement":
        mod = self.modulus
        return PiRingElement(self.prime, self.precision, tuple(x * c % mod for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        """True when every pi-coordinate vanishes, i.e. the element lies in Z/p^N."""
        return not any(self.coeffs[1:])

    def rational_part(self) -> int:
        if not self.is_rational:
            raise NonRationalResult(f"nonzero pi-coordinates {self.coeffs[1:]}")
        return self.coeffs[0]

    def __str__(self) -> str:
        terms = [f"{c}*pi^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"


def ring_mul(x: PiRingElement, y: PiRingElement) -> PiRingElement:
    """Product with degree overflow folded back through pi^(p-1) = -p.

    Only nonzero coefficients are visited, so monomial products (all Gauss
    sums are monomials) cost O(p) rather than O(p^2).
    """
    x._check(y)
    p, mod = x.prime, x.modulus
    d = p - 1
    out = [0] * d
    ys = [(k, c) for k, c in enumerate(y.coeffs) if c]
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for k, b in ys:
            s = i + k
            if s >= d:
                out[s - d] -= p * a * b
            else:
                out[s] += a * b
    return PiRingElement(p, x.precision, tuple(c % mod for c in out))


@dataclass(frozen=True)
class GaussSum:
    """g(omegabar^j) = -pi^j Gamma_p(j/(p-1)), kept as a monomial."""

    character_index: int
    unit: int
    value: PiRingElement


def gauss_sum_gk(j: int, p: int, N: int, table: GammaTable | None = None) -> GaussSum:
    if not 0 <= j <= p - 2:
        raise IndexOutOfRange(f"character index {j} not in [0, {p - 2}]")
    if table is None:
        table = gauss_table(p, N)
    u = -gamma_value(Fraction(j, p - 1), p, N, table) % p**N
    return GaussSum(j, u, PiRingElement.monomial(u, j, p, N))


@lru_cache(maxsize=128)
def all_gauss_sums(p: int, N: int) -> tuple[GaussSum, ...]:
    """g(omegabar^j) for j = 0..p-2."""
    check_odd_prime(p)
    table = gauss_table(p, N)
    return tuple(gauss_sum_gk(j, p, N, table) for j in range(p - 1))


def gauss(k: int, p: int, N: int) -> PiRingElement:
    """g(omegabar^k) for any integer k."""
    return all_gauss_sums(p, N)[k % (p - 1)].value


def theta_reconstruct(x: int, gauss_sums: Sequence[GaussSum], p: int, N: int) -> PiRingElement:
    """The additive character at x from its Gauss-sum expansion; theta(0) = 1."""
    x %= p
    if x == 0:
        return PiRingElement.constant(1, p, N)
    mod = p**N
    inv = pow(p - 1, -1, mod)
    acc = PiRingElement.zero(p, N)
    for g in gauss_sums:
        acc = acc + g.value.scale(omega_power(x, g.character_index, p, N) * inv)
    return acc


@lru_cache(maxsize=128)
def theta_table(p: int, N: int) -> tuple[PiRingElement, ...]:
    gs = all_gauss_sums(p, N)
    return tuple(theta_reconstruct(x, gs, p, N) for x in range(p))


Polynomial = Mapping[tuple[int, ...], int]


def poly_eval(f: Polynomial, xs: Sequence[int], p: int) -> int:
    total = 0
    for exps, c in f.items():
        term = c
        for x, e in zip(xs, exps):
            term *= pow(x, e, p)
        total += term
    return total % p


def count_zeros(f: Polynomial, p: int) -> int:
    """Brute-force count of affine zeros of f over F_p."""
    n = len(next(iter(f)))
    return sum(1 for xs in product(range(p), repeat=n) if poly_eval(f, xs, p) == 0)


def point_count_via_theta(f: Polynomial, p: int, N: int = 2) -> int:
    """Affine zeros of f from p*N_p = p^n + sum_{y != 0} sum_x theta(y f(x)).

    ``f`` maps exponent tuples to coefficients, e.g. {(3, 0): 1, (0, 2): -1}.
    One digit is spent on the division by p, and the ring precision is raised
    so that p^(precision - 1) exceeds p^n.
    """
    check_odd_prime(p)
    n = len(next(iter(f)))
    M = max(N, n + 1) + 1
    theta = theta_table(p, M)
    values = [poly_eval(f, xs, p) for xs in product(range(p), repeat=n)]
    acc = PiRingElement.constant(p**n, p, M)
    for y in range(1, p):
        for v in values:
            acc = acc + theta[y * v % p]
    c0 = acc.rational_part()
    if c0 % p:
        raise NonRationalResult(f"p * N_p = {c0} is not divisible by {p}")
    return c0 // p % p ** (M - 1)


def ap_via_gauss(a: int, b: int, p: int, N: int = 2) -> int:
    """Trace of Frobenius from the Gauss-sum expression, before any Gamma_p reshaping.

    a_p = -phi(b) p/(p-1) * [1 + 1/p sum_{j=1}^{p-2} g(T^-j) g(T^3j) g(T^-4j)/g(T^-2j) T^j(16b^2/a^3)]
    with T = omegabar. Division by g(chi) uses g(chi) g(chibar) = chi(-1) p.
    """
    check_short_curve(a, b, p)
    bound = isqrt(4 * p)
    while p ** N <= 2 * bound:
        N += 1
    M = N + 1
    mod = p**M
    z = 16 * b * b * pow(a**3, -1, p) % p
    # X = p^2 * bracket
    X = PiRingElement.constant(p * p, p, M)
    for j in range(1, p - 1):
        num = gauss(-j, p, M) * gauss(3 * j, p, M) * gauss(-4 * j, p, M)
        char = omega_power(z, -j, p, M)
        if (-2 * j) % (p - 1) == 0:
            # 1/g(eps) = -1
            term = num.scale(-p * char % mod)
        else:
            # 1/g(chi) = g(chibar) / (chi(-1) p), chi = T^(-2j), chi(-1) = (-1)^(2j) = 1
            sign = omega_power(-1, 2 * j, p, M)
            term = (num * gauss(2 * j, p, M)).scale(char * pow(sign, -1, mod) % mod)
        X = X + term
    x0 = X.rational_part()
    if x0 % p:
        raise NonRationalResult("bracket is not p-integral after scaling")
    val = PadicNumber.from_int(x0 // p, p, M - 1) * (-legendre(b, p)) / PadicNumber.from_int(p - 1, p, M - 1)
    return centered_lift(val, bound)


def product_rule_sides(j: int, p: int, N: int) -> tuple[PiRingElement, PiRingElement]:
    """g(chi) g(chibar) against chi(-1) p (or 1 for the trivial character), chi = omegabar^j."""
    lhs = gauss(j, p, N) * gauss(-j, p, N)
    if j % (p - 1) == 0:
        rhs = PiRingElement.constant(1, p, N)
    else:
        rhs = PiRingElement.constant(omega_power(-1, -j, p, N) * p, p, N)
    return lhs, rhs


def hasse_davenport_sides(m: int, s: int, p: int, N: int) -> tuple[PiRingElement, PiRingElement]:
    """prod_{i<m} g(chi^i psi) against g(psi^m) psi^-m(m) prod_{0<i<m} g(chi^i).

    chi = omega^((p-1)/m) has order m and psi = omega^s. A character omega^k
    has Gauss sum g(omegabar^(-k)).
    """
    if (p - 1) % m:
        raise ValueError(f"no character of order {m} mod {p}")
    c = (p - 1) // m
    lhs = PiRingElement.constant(1, p, N)
    for i in range(m):
        lhs = lhs * gauss(-(c * i + s), p, N)
    rhs = gauss(-(m * s), p, N).scale(omega_power(m, -m * s, p, N))
    for i in range(1, m):
        rhs = rhs * gauss(-c * i, p, N)
    return lhs, rhs
