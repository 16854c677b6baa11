from fractions import Fraction

import pytest

from gammatrace.errors import (
    DenominatorDivisibleByP,
    EvenPrime,
    InsufficientPrecision,
    NoLiftInWindow,
    NotPrime,
)
from gammatrace.padic import (
    INF,
    PadicNumber,
    centered_lift,
    check_odd_prime,
    frac_floor,
    legendre,
    omega_power,
    primes_between,
    reduce_rational,
    teichmuller,
)


@pytest.mark.parametrize(
    "r, p, N, expected",
    [(Fraction(0), 5, 3, 0), (Fraction(1, 4), 5, 3, 94), (Fraction(-1, 2), 7, 2, 24)],
)
def test_reduce_rational(r, p, N, expected):
    assert reduce_rational(r, p, N) == expected


def test_reduce_rational_rejects_p_in_denominator():
    with pytest.raises(DenominatorDivisibleByP):
        reduce_rational(Fraction(1, 3), 3, 2)


@pytest.mark.parametrize(
    "r, frac, floor",
    [(Fraction(3, 4), Fraction(3, 4), 0), (Fraction(-1, 2), Fraction(1, 2), -1), (Fraction(7, 3), Fraction(1, 3), 2)],
)
def test_frac_floor(r, frac, floor):
    assert frac_floor(r) == (frac, floor)


def test_teichmuller_examples():
    assert teichmuller(1, 5, 2) == 1
    assert teichmuller(0, 7, 3) == 0
    assert teichmuller(2, 5, 2) == 7


@pytest.mark.parametrize("p, N", [(3, 4), (5, 3), (13, 2), (97, 2)])
def test_teichmuller_is_root_of_unity(p, N):
    mod = p**N
    for x in range(1, p):
        w = teichmuller(x, p, N)
        assert w % p == x
        assert pow(w, p - 1, mod) == 1


def test_omega_power_at_zero_is_zero():
    assert omega_power(0, 0, 7, 2) == 0
    assert omega_power(0, 3, 7, 2) == 0


def test_legendre():
    assert legendre(1, 5) == 1
    assert legendre(0, 7) == 0
    assert legendre(3, 5) == -1
    for x in range(1, 13):
        assert legendre(x, 13) == (1 if pow(teichmuller(x, 13, 1), 6, 13) == 1 else -1)


def test_centered_lift_examples():
    assert centered_lift(PadicNumber.from_int(122, 5, 3), 4) == -3
    assert centered_lift(PadicNumber.zero(5, 3), 4) == 0
    with pytest.raises(NoLiftInWindow):
        centered_lift(PadicNumber.from_int(60, 5, 3), 4)


def test_centered_lift_needs_unique_window():
    with pytest.raises(InsufficientPrecision):
        centered_lift(PadicNumber.from_int(3, 5, 1), 4)


def test_prime_checks():
    with pytest.raises(EvenPrime):
        check_odd_prime(2)
    with pytest.raises(NotPrime):
        check_odd_prime(9)
    assert primes_between(5, 31) == [5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert primes_between(24, 28) == []


def test_padic_valuation_bookkeeping():
    x = PadicNumber.from_rational(Fraction(22, 5), 5, 1)
    assert x.valuation == -1 and x.unit == 22 and x.precision == 2
    y = x * 5
    assert y.valuation == 0 and y.residue() == 22 and y.absolute_precision == 2
    assert centered_lift(y, 4) == -3


def test_padic_addition_aligns_valuations():
    p = 7
    a = PadicNumber.from_rational(Fraction(1, 7), p, 3)
    b = PadicNumber.from_rational(Fraction(3), p, 3)
    s = a + b
    assert s.valuation == -1
    assert s.absolute_precision == 3
    assert (s - a).congruent(b)


def test_padic_cancellation_keeps_absolute_precision():
    a = PadicNumber.from_int(1, 5, 3)
    z = a - a
    assert z.is_zero and z.absolute_precision == 3


def test_padic_division():
    a = PadicNumber.from_int(2, 11, 4)
    b = PadicNumber.from_int(3, 11, 4)
    q = a / b
    assert (q * b).congruent(a)
    assert q.residue() == 2 * pow(3, -1, 11**4) % 11**4


def test_exact_zero():
    z = PadicNumber.zero(5)
    assert z.is_zero and z.absolute_precision == INF
    assert (z + PadicNumber.from_int(3, 5, 2)).residue() == 3
    assert str(z) == "0"
