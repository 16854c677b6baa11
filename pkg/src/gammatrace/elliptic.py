"""Weierstrass models over F_p, their invariants, and brute-force traces of Frobenius."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ExcludedJInvariant, SingularCurve, ZeroU
from .hypergeom_g import p3_value
from .padic import centered_lift, check_odd_prime, legendre


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p."""

    p: int
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, getattr(self, name) % self.p)

    @classmethod
    def short(cls, a: int, b: int, p: int) -> "WeierstrassCurve":
        return cls(p, 0, 0, 0, a, b)

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.coefficients)) + f"]/F_{self.p}"


@dataclass(frozen=True)
class CurveInvariants:
    b2: int
    b4: int
    b6: int
    b8: int
    c4: int
    c6: int
    delta: int
    j: int | None  # None when the model is singular


@dataclass(frozen=True)
class AdmissibleTransform:
    """x = u^2 x' + r,  y = u^3 y' + s u^2 x' + t."""

    u: int
    r: int = 0
    s: int = 0
    t: int = 0


IDENTITY = AdmissibleTransform(1)


def invariants(E: WeierstrassCurve) -> CurveInvariants:
    p = E.p
    if p <= 3:
        raise ValueError("invariants use 1728^-1, so p > 3 is required")
    a1, a2, a3, a4, a6 = E.coefficients
    b2 = (a1 * a1 + 4 * a2) % p
    b4 = (2 * a4 + a1 * a3) % p
    b6 = (a3 * a3 + 4 * a6) % p
    b8 = (a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4) % p
    c4 = (b2 * b2 - 24 * b4) % p
    c6 = (-(b2**3) + 36 * b2 * b4 - 216 * b6) % p
    delta = (c4**3 - c6 * c6) * pow(1728, -1, p) % p
    j = c4**3 * pow(delta, -1, p) % p if delta else None
    return CurveInvariants(b2, b4, b6, b8, c4, c6, delta, j)


def j_invariant(E: WeierstrassCurve) -> int:
    inv = invariants(E)
    if inv.j is None:
        raise SingularCurve(f"{E} has zero discriminant")
    return inv.j


def apply_transform(E: WeierstrassCurve, T: AdmissibleTransform) -> WeierstrassCurve:
    p = E.p
    if T.u % p == 0:
        raise ZeroU("u must be nonzero")
    a1, a2, a3, a4, a6 = E.coefficients
    u, r, s, t = T.u, T.r, T.s, T.t
    ui = pow(u, -1, p)
    return WeierstrassCurve(
        p,
        (a1 + 2 * s) * ui,
        (a2 - s * a1 + 3 * r - s * s) * ui**2,
        (a3 + r * a1 + 2 * t) * ui**3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) * ui**4,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) * ui**6,
    )


def to_short_form(E: WeierstrassCurve) -> tuple[int, int, AdmissibleTransform]:
    """Complete the square in y, then depress the cubic; u = 1 throughout."""
    p = E.p
    if p <= 3:
        raise ValueError("short Weierstrass form needs p > 3")
    a1, a2, a3, _, _ = E.coefficients
    half = pow(2, -1, p)
    s = -a1 * half % p
    b2 = (a1 * a1 + 4 * a2) % p
    r = -b2 * pow(12, -1, p) % p
    t = -(a3 + r * a1) * half % p
    T = AdmissibleTransform(1, r, s, t)
    F = apply_transform(E, T)
    assert F.a1 == F.a2 == F.a3 == 0
    return F.a4, F.a6, T


def count_points(E: WeierstrassCurve) -> int:
    """#E(F_p): affine solutions by a double loop over (x, y), plus the point at infinity."""
    p = E.p
    a1, a2, a3, a4, a6 = E.coefficients
    count = 1
    for x in range(p):
        rhs = (((x + a2) * x + a4) * x + a6) % p
        lin = (a1 * x + a3) % p
        for y in range(p):
            if (y * (y + lin) - rhs) % p == 0:
                count += 1
    return count


def discriminant(E: WeierstrassCurve) -> int:
    """-b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6, valid in every characteristic."""
    p = E.p
    a1, a2, a3, a4, a6 = E.coefficients
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return (-b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6) % p


def ap_enumerate(E: WeierstrassCurve) -> int:
    if discriminant(E) == 0:
        raise SingularCurve(f"{E} is singular")
    return E.p + 1 - count_points(E)


def ap_legendre_sum(a: int, b: int, p: int) -> int:
    """-sum_x phi(x^3 + ax + b), a second oracle that is only O(p)."""
    check_odd_prime(p)
    if p <= 3:
        raise ValueError("short form needs p > 3")
    if (4 * a**3 + 27 * b * b) % p == 0:
        raise SingularCurve(f"y^2 = x^3 + {a}x + {b} is singular over F_{p}")
    return -sum(legendre(x**3 + a * x + b, p) for x in range(p))


def check_short_curve(a: int, b: int, p: int) -> None:
    """Preconditions of the trace formulas: p > 3, nonsingular, j not 0 or 1728."""
    if p <= 3:
        raise ValueError("the trace formulas need p > 3")
    check_odd_prime(p)
    if (4 * a**3 + 27 * b**2) % p == 0:
        raise SingularCurve(f"y^2 = x^3 + {a}x + {b} is singular over F_{p}")
    if a % p == 0:
        raise ExcludedJInvariant("j = 0")
    if b % p == 0:
        raise ExcludedJInvariant("j = 1728")


def admissible_short_curves(p: int) -> list[tuple[int, int]]:
    """All (a, b) in F_p* x F_p* with nonzero discriminant; these are exactly j != 0, 1728."""
    return [
        (a, b)
        for a in range(1, p)
        for b in range(1, p)
        if (4 * a**3 + 27 * b * b) % p
    ]


class P3Check(NamedTuple):
    enumerated: int
    formula: int
    match: bool


def a3_special(a: int, b: int, N: int = 2) -> P3Check:
    """y^2 = x^3 + ax^2 + b over F_3 against phi(a) * 2G2[0, 0; 0, 1/2 | -a/b]_3."""
    a %= 3
    b %= 3
    if not a or not b:
        raise ValueError("a and b must be nonzero in F_3")
    enumerated = 4 - count_points(WeierstrassCurve(3, 0, a, 0, 0, b))
    # |a_3| <= 2 sqrt 3 < 4, and 3^2 > 2 * 3
    G = p3_value(a, b, N).value
    formula = centered_lift(G * legendre(a, 3), 3)
    return P3Check(enumerated, formula, enumerated == formula)
