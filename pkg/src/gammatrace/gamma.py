"""Morita's p-adic gamma function, evaluated in batch by one forward sweep.

For a positive integer n, Gamma_p(n) = (-1)^n * prod(j for 0 < j < n, p not dividing j).
Gamma_p is 1-Lipschitz on Z_p for odd p, so Gamma_p(x) mod p^N only depends on
x mod p^N, and a table keyed on residues mod p^N covers every x in Z_p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import MissingGammaValue, PrecisionExceedsTable
from .padic import (
    RationalLike,
    as_rational,
    check_odd_prime,
    frac_floor,
    omega_power,
    reduce_rational,
)


@dataclass(frozen=True)
class GammaTable:
    prime: int
    work_precision: int
    entries: Mapping[int, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)


def _range_product(lo: int, hi: int, p: int, mod: int) -> int:
    """prod(j for lo <= j < hi, p not dividing j) mod ``mod``."""
    acc = 1
    j = lo
    while j < hi:
        if j % p == 0:
            j += 1
            continue
        # run of consecutive integers up to the next multiple of p
        stop = min(hi, (j // p + 1) * p)
        acc = acc * math.prod(range(j, stop)) % mod
        j = stop
    return acc


def gamma_sweep(p: int, N: int, targets: Iterable[int]) -> GammaTable:
    """Capture Gamma_p(m) mod p^N at every target residue in a single pass.

    The running product over 0 < j < m (p not dividing j) is advanced from one
    sorted target to the next; whole runs between multiples of p are folded
    with one ``math.prod`` call. Cost is O(max(targets)) multiplications.
    """
    check_odd_prime(p)
    mod = p**N
    wanted = sorted({t % mod for t in targets})
    if not wanted:
        raise ValueError("gamma_sweep needs at least one target")
    entries: dict[int, int] = {}
    running = 1  # product over 0 < j < pos
    pos = 1
    for m in wanted:
        if m == 0:
            entries[0] = 1
            continue
        running = running * _range_product(pos, m, p, mod) % mod
        pos = m
        entries[m] = running if m % 2 == 0 else (-running) % mod
    return GammaTable(p, N, entries)


def gamma_at(m: int, table: GammaTable, N: int | None = None) -> int:
    """Gamma_p(x) mod p^N for any x congruent to m mod p^N."""
    p, Nw = table.prime, table.work_precision
    if N is None:
        N = Nw
    if N > Nw:
        raise PrecisionExceedsTable(f"requested p^{N} from a table built to p^{Nw}")
    mod = p**N
    key = m % p**Nw
    if key in table.entries:
        return table.entries[key] % mod
    if N < Nw:
        m %= mod
        for k, val in table.entries.items():
            if k % mod == m:
                return val % mod
    raise MissingGammaValue(f"residue {m} was not swept for p={p}")


def gamma_value(x: RationalLike, p: int, N: int, table: GammaTable) -> int:
    """Gamma_p(x) mod p^N for x in Q with p-free denominator (no fractional-part reduction)."""
    return gamma_at(reduce_rational(x, p, table.work_precision), table, N)


def gamma_frac(r: RationalLike, p: int, N: int, table: GammaTable) -> int:
    """Gamma_p(<r>) mod p^N, the form that appears in the hypergeometric sums."""
    frac, _ = frac_floor(r)
    return gamma_value(frac, p, N, table)


def residues_for(xs: Iterable[RationalLike], p: int, N: int, fractional: bool = False) -> set[int]:
    out = set()
    for x in xs:
        x = as_rational(x)
        if fractional:
            x = frac_floor(x)[0]
        out.add(reduce_rational(x, p, N))
    return out


def table_for(p: int, N: int, xs: Iterable[RationalLike]) -> GammaTable:
    """Sweep covering Gamma_p at every rational in ``xs`` (taken as given, not reduced)."""
    return gamma_sweep(p, N, residues_for(xs, p, N) | {0})


@lru_cache(maxsize=256)
def gauss_table(p: int, N: int) -> GammaTable:
    """Gamma_p at j/(p-1) for 0 <= j <= p-1: everything Gross-Koblitz needs."""
    return table_for(p, N, [Fraction(j, p - 1) for j in range(p)])


# -- identities ---------------------------------------------------------------
# Each returns (lhs, rhs) as residues mod p^N so callers can report both sides.


def reflection_sides(x: RationalLike, p: int, N: int, table: GammaTable) -> tuple[int, int]:
    """Gamma_p(x) Gamma_p(1-x) against (-1)^x0, x0 in {1..p} congruent to x mod p."""
    x = as_rational(x)
    mod = p**N
    lhs = gamma_value(x, p, N, table) * gamma_value(1 - x, p, N, table) % mod
    x0 = reduce_rational(x, p, 1) or p
    return lhs, (-1) ** x0 % mod


def multiplication_sides(r: int, m: int, p: int, N: int, table: GammaTable) -> tuple[int, int]:
    """Multiplication formula at x = r/(p-1), 0 <= r <= p-1, for p not dividing m."""
    mod = p**N
    x = Fraction(r, p - 1)
    lhs = 1
    for h in range(m):
        lhs = lhs * gamma_value((x + h) / m, p, N, table) % mod
    # (1 - x)(1 - p) = r - (p - 1) is an integer exponent of omega(m)
    rhs = omega_power(m, r - (p - 1), p, N) * gamma_value(x, p, N, table) % mod
    for h in range(1, m):
        rhs = rhs * gamma_value(Fraction(h, m), p, N, table) % mod
    return lhs, rhs


def multiplication_arguments(p: int, m: int) -> list[Fraction]:
    xs = [Fraction(h, m) for h in range(1, m)]
    for r in range(p):
        x = Fraction(r, p - 1)
        xs.append(x)
        xs.extend((x + h) / m for h in range(m))
    return xs


def lemma_sides(j: int, t: int, p: int, N: int, table: GammaTable, mirrored: bool = False) -> tuple[int, int]:
    """The two product identities used to reshape the trace formula.

    Plain: Gamma(<tj/(p-1)>) omega(t^(tj)) prod_{h=1}^{t-1} Gamma(h/t)
           = prod_{h=0}^{t-1} Gamma(<h/t + j/(p-1)>).
    Mirrored: j -> -j on the left and arguments <(1+h)/t - j/(p-1)> on the right.
    """
    mod = p**N
    s = -1 if mirrored else 1
    y = Fraction(j, p - 1)
    lhs = gamma_frac(s * t * y, p, N, table) * omega_power(t, s * t * j, p, N) % mod
    for h in range(1, t):
        lhs = lhs * gamma_value(Fraction(h, t), p, N, table) % mod
    rhs = 1
    for h in range(t):
        arg = Fraction(1 + h, t) - y if mirrored else Fraction(h, t) + y
        rhs = rhs * gamma_frac(arg, p, N, table) % mod
    return lhs, rhs


def lemma_arguments(p: int, t: int) -> list[Fraction]:
    xs = [Fraction(h, t) for h in range(1, t)]
    for j in range(p - 1):
        y = Fraction(j, p - 1)
        xs.append(frac_floor(t * y)[0])
        xs.append(frac_floor(-t * y)[0])
        for h in range(t):
            xs.append(frac_floor(Fraction(h, t) + y)[0])
            xs.append(frac_floor(Fraction(1 + h, t) - y)[0])
    return xs
