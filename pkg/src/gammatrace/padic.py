"""Residue arithmetic mod p^N with explicit valuation tracking.

Rationals are plain :class:`fractions.Fraction` values. A :class:`PadicNumber`
stores ``unit * p**valuation`` with the unit known modulo ``p**precision``,
so multiplying by powers of p never costs digits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    DenominatorDivisibleByP,
    EvenPrime,
    InsufficientPrecision,
    NoLiftInWindow,
    NotPIntegral,
    NotPrime,
)

Rational = Fraction
RationalLike = Union[Fraction, int]

INF = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def check_odd_prime(p: int) -> None:
    if p == 2:
        raise EvenPrime("p = 2 is not supported")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def as_rational(r: RationalLike | str) -> Fraction:
    return r if isinstance(r, Fraction) else Fraction(r)


def reduce_rational(r: RationalLike, p: int, N: int) -> int:
    """Image of ``r`` in Z/p^N, as the least nonnegative residue."""
    r = as_rational(r)
    if r.denominator % p == 0:
        raise DenominatorDivisibleByP(f"{p} divides the denominator of {r}")
    mod = p**N
    return r.numerator * pow(r.denominator, -1, mod) % mod


def frac_floor(r: RationalLike) -> tuple[Fraction, int]:
    """Split ``r`` into (fractional part in [0, 1), floor)."""
    r = as_rational(r)
    fl = r.numerator // r.denominator
    return r - fl, fl


def teichmuller(x: int, p: int, N: int) -> int:
    """The (p-1)-th root of unity mod p^N congruent to x mod p; 0 maps to 0."""
    x %= p
    if x == 0:
        return 0
    mod = p**N
    y = x
    # N - 1 Frobenius steps reach the fixpoint; the extra one is a guard.
    for _ in range(N + 1):
        z = pow(y, p, mod)
        if z == y:
            return y
        y = z
    raise ArithmeticError(f"Teichmuller iteration did not converge for x={x}, p={p}")


def omega_power(x: int, k: int, p: int, N: int) -> int:
    """omega(x)^k mod p^N for any integer k, with every power of omega at 0 equal to 0."""
    w = teichmuller(x, p, N)
    if w == 0:
        return 0
    return pow(w, k % (p - 1), p**N)


def legendre(x: int, p: int) -> int:
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class PadicNumber:
    """An element ``unit * p**valuation`` of Q_p at finite precision.

    For nonzero values ``precision`` counts the known digits of ``unit``.
    Zero has ``valuation == inf``; its ``precision`` then records the absolute
    precision to which it is known to vanish (``inf`` for an exact zero).
    """

    prime: int
    precision: int | float
    valuation: int | float
    unit: int

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, p: int, absprec: int | float = INF) -> "PadicNumber":
        return cls(p, absprec, INF, 0)

    @classmethod
    def _normalize(cls, p: int, s: int, v: int, absprec: int | float) -> "PadicNumber":
        # s is known modulo p^(absprec - v)
        if absprec != INF:
            s %= p ** (absprec - v)
        if s == 0:
            return cls.zero(p, absprec)
        k = valuation(s, p)
        v += k
        s //= p**k
        rel = absprec - v
        if rel != INF:
            s %= p**rel
        return cls(p, rel, v, s)

    @classmethod
    def from_rational(cls, r: RationalLike, p: int, absprec: int | float) -> "PadicNumber":
        """``r`` known modulo p^absprec; denominators divisible by p give negative valuation."""
        r = as_rational(r)
        if r == 0:
            return cls.zero(p, absprec)
        num, den = r.numerator, r.denominator
        vn, vd = valuation(num, p), valuation(den, p)
        num //= p**vn
        den //= p**vd
        v = vn - vd
        rel = absprec - v
        if rel <= 0:
            return cls.zero(p, absprec)
        if rel == INF:
            if den != 1:
                raise InsufficientPrecision("exact p-adic number needs an integral unit")
            return cls(p, INF, v, num)
        mod = p**rel
        return cls(p, rel, v, num * pow(den, -1, mod) % mod)

    @classmethod
    def from_int(cls, n: int, p: int, absprec: int | float) -> "PadicNumber":
        return cls.from_rational(Fraction(n), p, absprec)

    @classmethod
    def from_unit(cls, unit: int, v: int, p: int, precision: int) -> "PadicNumber":
        """``unit * p**v`` where ``unit`` is known mod p^precision (it need not be a unit)."""
        return cls._normalize(p, unit, v, v + precision)

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def absolute_precision(self) -> int | float:
        if self.is_zero:
            return self.precision
        return self.valuation + self.precision

    def residue(self) -> int:
        """Least nonnegative integer congruent to self mod p^absolute_precision."""
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise NotPIntegral(f"{self} is not p-integral")
        n = self.unit * self.prime**self.valuation
        if self.absolute_precision != INF:
            n %= self.prime**self.absolute_precision
        return n

    def with_absprec(self, absprec: int | float) -> "PadicNumber":
        """Forget digits beyond ``absprec`` (never adds digits)."""
        absprec = min(absprec, self.absolute_precision)
        if self.is_zero:
            return PadicNumber.zero(self.prime, absprec)
        return PadicNumber._normalize(self.prime, self.unit, self.valuation, absprec)

    def congruent(self, other: "PadicNumber") -> bool:
        """Equality at the common absolute precision of both operands."""
        self._check(other)
        return (self - other).is_zero

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "PadicNumber") -> None:
        if other.prime != self.prime:
            raise ValueError(f"mixed primes {self.prime} and {other.prime}")

    def _coerce(self, other) -> "PadicNumber":
        if isinstance(other, PadicNumber):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return PadicNumber.from_rational(other, self.prime, INF if isinstance(other, int) else self.absolute_precision)
        return NotImplemented

    def __add__(self, other) -> "PadicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.prime
        absprec = min(self.absolute_precision, other.absolute_precision)
        if self.is_zero:
            return other.with_absprec(absprec)
        if other.is_zero:
            return self.with_absprec(absprec)
        v = min(self.valuation, other.valuation)
        if absprec <= v:
            return PadicNumber.zero(p, absprec)
        s = self.unit * p ** (self.valuation - v) + other.unit * p ** (other.valuation - v)
        return PadicNumber._normalize(p, s, v, absprec)

    __radd__ = __add__

    def __neg__(self) -> "PadicNumber":
        if self.is_zero:
            return self
        u = -self.unit
        if self.precision != INF:
            u %= self.prime**self.precision
        return PadicNumber(self.prime, self.precision, self.valuation, u)

    def __sub__(self, other) -> "PadicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "PadicNumber":
        return (-self) + other

    def __mul__(self, other) -> "PadicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.prime
        if self.is_zero or other.is_zero:
            if self.is_zero and other.is_zero:
                return PadicNumber.zero(p, self.precision + other.precision)
            z, nz = (self, other) if self.is_zero else (other, self)
            return PadicNumber.zero(p, z.precision + nz.valuation)
        rel = min(self.precision, other.precision)
        u = self.unit * other.unit
        if rel != INF:
            u %= p**rel
        return PadicNumber(p, rel, self.valuation + other.valuation, u)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self.is_zero:
            raise ZeroDivisionError("inverse of p-adic zero")
        if self.precision == INF:
            if abs(self.unit) != 1:
                raise InsufficientPrecision("inverse of an exact non-unit needs finite precision")
            return PadicNumber(self.prime, INF, -self.valuation, self.unit)
        mod = self.prime**self.precision
        return PadicNumber(self.prime, self.precision, -self.valuation, pow(self.unit, -1, mod))

    def __truediv__(self, other) -> "PadicNumber":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __str__(self) -> str:
        p = self.prime
        tail = "" if self.absolute_precision == INF else f" + O({p}^{self.absolute_precision})"
        if self.is_zero:
            return f"0{tail}"
        if self.valuation >= 0:
            return f"{self.residue()}{tail}"
        return f"{self.unit}/{p}^{-self.valuation}{tail}"


def centered_lift(x: PadicNumber, bound: int) -> int:
    """The unique integer m with |m| <= bound and m == x mod p^absolute_precision."""
    absprec = x.absolute_precision
    modulus = None if absprec == INF else x.prime**absprec
    if modulus is not None and 2 * bound >= modulus:
        raise InsufficientPrecision(
            f"window [-{bound}, {bound}] is not unique modulo {x.prime}^{absprec}"
        )
    if x.is_zero:
        return 0
    if x.valuation < 0:
        raise NotPIntegral(f"{x} is not p-integral")
    if modulus is None:
        m = x.unit * x.prime**x.valuation
        if abs(m) > bound:
            raise NoLiftInWindow(f"{m} lies outside [-{bound}, {bound}]")
        return m
    m = x.residue()
    if m <= bound:
        return m
    if modulus - m <= bound:
        return m - modulus
    raise NoLiftInWindow(f"no integer in [-{bound}, {bound}] is congruent to {m} mod {modulus}")
