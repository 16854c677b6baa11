"""Exact integer q-expansions of eta quotients and the weight-4 level-25 cusp form.

    f_i = eta(z)^(5-i) eta(5z)^4 eta(25z)^(i-1),   i = 1..5
    f   = f_1 + 5 f_2 + 20 f_3 + 25 f_4 + 25 f_5 = sum c(n) q^n
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import IndexBeyondTruncation

DEFAULT_TRUNCATION = 60


@dataclass(frozen=True)
class QSeries:
    """c(0) + c(1) q + ... + c(M) q^M + O(q^(M+1))."""

    coeffs: tuple[int, ...]

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, M: int) -> "QSeries":
        return cls((1,) + (0,) * M)

    def __add__(self, other: "QSeries") -> "QSeries":
        M = min(self.truncation, other.truncation)
        return QSeries(tuple(x + y for x, y in zip(self.coeffs[: M + 1], other.coeffs[: M + 1])))

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries(tuple(other * c for c in self.coeffs))
        M = min(self.truncation, other.truncation)
        out = [0] * (M + 1)
        for i, a in enumerate(self.coeffs[: M + 1]):
            if a:
                for k, b in enumerate(other.coeffs[: M + 1 - i]):
                    out[i + k] += a * b
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k, keeping the truncation order."""
        return QSeries((0,) * k + self.coeffs[: len(self.coeffs) - k])

    def truncate(self, M: int) -> "QSeries":
        return QSeries(self.coeffs[: M + 1])


def euler_product(exponent: int, scale: int, M: int) -> QSeries:
    """prod_{n >= 1} (1 - q^(scale n))^exponent to order q^M."""
    if M < 1:
        raise ValueError("truncation must be at least 1")
    c = [1] + [0] * M
    for n in range(scale, M + 1, scale):
        for _ in range(exponent):
            # multiply in place by (1 - q^n), high degrees first
            for k in range(M, n - 1, -1):
                c[k] -= c[k - n]
    return QSeries(tuple(c))


def eta_quotient(powers: Sequence[tuple[int, int]], M: int) -> QSeries:
    """prod eta(scale z)^exponent as an integer series; the q^(1/24) offsets must sum to an integer."""
    offset = sum(Fraction(scale * e, 24) for scale, e in powers)
    if offset.denominator != 1:
        raise ValueError(f"eta quotient has fractional leading exponent {offset}")
    series = QSeries.one(M)
    for scale, e in powers:
        series = series * euler_product(e, scale, M)
    return series.shift(int(offset))


@lru_cache(maxsize=8)
def build_f(M: int = DEFAULT_TRUNCATION) -> QSeries:
    weights = (1, 5, 20, 25, 25)
    total = QSeries((0,) * (M + 1))
    for i, w in enumerate(weights, start=1):
        fi = eta_quotient([(1, 5 - i), (5, 4), (25, i - 1)], M)
        total = total + fi * w
    return total


def coefficient(f: QSeries, n: int) -> int:
    if n < 0 or n > f.truncation:
        raise IndexBeyondTruncation(f"c({n}) is beyond the truncation q^{f.truncation}")
    return f.coeffs[n]


def c(n: int, M: int = DEFAULT_TRUNCATION) -> int:
    return coefficient(build_f(max(M, n)), n)
