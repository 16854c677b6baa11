import pytest

from gammatrace.errors import IndexBeyondTruncation
from gammatrace.modforms import QSeries, build_f, c, coefficient, eta_quotient, euler_product
from gammatrace.padic import primes_between


def pentagonal(M):
    out = [0] * (M + 1)
    k = 0
    while True:
        hit = False
        for g in {k * (3 * k - 1) // 2, k * (3 * k + 1) // 2}:
            if g <= M:
                out[g] = (-1) ** k
                hit = True
        if not hit:
            return out
        k += 1


def test_euler_product_examples():
    assert euler_product(1, 1, 8).coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0)
    assert euler_product(0, 1, 5).coeffs == (1, 0, 0, 0, 0, 0)
    assert euler_product(4, 1, 3).coeffs == (1, -4, 2, 8)
    assert list(euler_product(1, 1, 200).coeffs) == pentagonal(200)


def test_scaled_product():
    s = euler_product(1, 5, 12)
    assert s.coeffs[:11] == (1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1)


def test_eta_offset_must_be_integral():
    with pytest.raises(ValueError):
        eta_quotient([(1, 1)], 10)
    # eta(z)^4 eta(5z)^4 starts at q^1
    assert eta_quotient([(1, 4), (5, 4)], 5).coeffs[:3] == (0, 1, -4)


def test_first_coefficients():
    f = build_f(20)
    assert f.coeffs[:12] == (0, 1, 1, 7, -7, 0, 7, 6, -15, 22, 0, -43)
    assert coefficient(f, 0) == 0 and coefficient(f, 1) == 1 and coefficient(f, 2) == 1


def test_truncation_error():
    with pytest.raises(IndexBeyondTruncation):
        coefficient(build_f(10), 11)


def test_truncation_monotone():
    small, big = build_f(30), build_f(60)
    assert big.coeffs[:31] == small.coeffs


def test_deligne_window():
    for p in primes_between(2, 59):
        assert c(p) ** 2 <= 4 * p**3


def test_multiplicative_at_coprime_indices():
    # Hecke multiplicativity of a newform, an outside sanity check on the expansion
    for m, n in [(2, 3), (3, 4), (2, 7), (4, 9)]:
        assert c(m * n) == c(m) * c(n)


def test_series_arithmetic():
    x = QSeries((1, 2, 3, 4))
    y = QSeries((0, 1, -1, 5))
    z = QSeries((2, 0, 7, 1))
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert (x + y).coeffs == (1, 3, 2, 9)
    assert (x * 3).coeffs == (3, 6, 9, 12)
    assert x.shift(2).coeffs == (0, 0, 1, 2)
    assert (x * QSeries((1, 2))).truncation == 1
