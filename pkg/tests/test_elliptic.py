import random

import pytest

from gammatrace.elliptic import (
    IDENTITY,
    AdmissibleTransform,
    WeierstrassCurve,
    a3_special,
    admissible_short_curves,
    ap_enumerate,
    ap_legendre_sum,
    apply_transform,
    check_short_curve,
    count_points,
    invariants,
    j_invariant,
    to_short_form,
)
from gammatrace.errors import CurveSingular, ExcludedJInvariant, SingularCurve, ZeroU
from gammatrace.padic import legendre, primes_between


def random_curve(p, rng):
    while True:
        E = WeierstrassCurve(p, *(rng.randrange(p) for _ in range(5)))
        if invariants(E).delta:
            return E


def test_short_invariants():
    inv = invariants(WeierstrassCurve.short(1, 1, 5))
    assert (inv.c4, inv.delta, inv.j) == (2, 4, 2)
    p, a, b = 101, 17, 33
    inv = invariants(WeierstrassCurve.short(a, b, p))
    assert inv.c4 == -48 * a % p
    assert inv.c6 == -864 * b % p
    assert inv.delta == -16 * (4 * a**3 + 27 * b * b) % p
    assert j_invariant(WeierstrassCurve.short(0, 1, 7)) == 0


def test_invariant_relations():
    rng = random.Random(3)
    for p in (5, 7, 11, 101):
        for _ in range(20):
            E = WeierstrassCurve(p, *(rng.randrange(p) for _ in range(5)))
            inv = invariants(E)
            assert 1728 * inv.delta % p == (inv.c4**3 - inv.c6**2) % p
            assert 4 * inv.b8 % p == (inv.b2 * inv.b6 - inv.b4**2) % p
            if inv.delta:
                assert inv.j * inv.delta % p == inv.c4**3 % p


def test_singular_j():
    with pytest.raises(SingularCurve):
        j_invariant(WeierstrassCurve.short(0, 0, 7))
    assert CurveSingular is SingularCurve


def test_transform_identity_and_zero_u():
    E = WeierstrassCurve(7, 1, 2, 3, 4, 5)
    assert apply_transform(E, IDENTITY) == E
    with pytest.raises(ZeroU):
        apply_transform(E, AdmissibleTransform(0))


@pytest.mark.parametrize("p", [5, 7, 13, 31])
def test_transform_scaling_laws(p):
    rng = random.Random(p)
    for _ in range(10):
        E = random_curve(p, rng)
        inv = invariants(E)
        for _ in range(20):
            T = AdmissibleTransform(rng.randrange(1, p), rng.randrange(p), rng.randrange(p), rng.randrange(p))
            F = apply_transform(E, T)
            jnv = invariants(F)
            ui = pow(T.u, -1, p)
            assert jnv.j == inv.j
            assert jnv.delta == inv.delta * ui**12 % p
            assert jnv.c4 == inv.c4 * ui**4 % p
            assert jnv.c6 == inv.c6 * ui**6 % p
            assert ap_enumerate(F) == ap_enumerate(E)


def test_to_short_form():
    a, b, T = to_short_form(WeierstrassCurve.short(3, 4, 11))
    assert (a, b, T) == (3, 4, IDENTITY)
    a, b, _ = to_short_form(WeierstrassCurve(7, 0, 0, 1, 0, 0))
    assert (a, b) == (0, 2)
    rng = random.Random(13)
    for _ in range(20):
        E = random_curve(13, rng)
        a, b, _ = to_short_form(E)
        assert count_points(WeierstrassCurve.short(a, b, 13)) == count_points(E)


def test_enumeration_examples():
    E = WeierstrassCurve.short(1, 1, 5)
    assert count_points(E) == 9
    assert ap_enumerate(E) == -3
    assert ap_legendre_sum(1, 1, 5) == -3
    with pytest.raises(SingularCurve):
        ap_enumerate(WeierstrassCurve.short(0, 0, 5))
    with pytest.raises(SingularCurve):
        ap_legendre_sum(0, 0, 5)


@pytest.mark.parametrize("p", primes_between(5, 23))
def test_oracles_agree(p):
    for a in range(p):
        for b in range(p):
            if (4 * a**3 + 27 * b * b) % p == 0:
                continue
            ap = ap_enumerate(WeierstrassCurve.short(a, b, p))
            assert ap == ap_legendre_sum(a, b, p)
            assert ap * ap <= 4 * p


@pytest.mark.parametrize("p", [7, 11, 13, 31])
def test_quadratic_twist(p):
    d = next(x for x in range(2, p) if legendre(x, p) == -1)
    for a, b in admissible_short_curves(p)[:40]:
        twisted = ap_legendre_sum(a * d * d, b * d**3, p)
        assert twisted == -ap_legendre_sum(a, b, p)
        assert twisted == ap_enumerate(WeierstrassCurve.short(a * d * d, b * d**3, p))


def test_check_short_curve():
    with pytest.raises(ExcludedJInvariant):
        check_short_curve(0, 1, 7)
    with pytest.raises(ExcludedJInvariant):
        check_short_curve(1, 0, 7)
    with pytest.raises(SingularCurve):
        check_short_curve(0, 0, 7)
    with pytest.raises(ValueError):
        check_short_curve(1, 1, 3)


def test_admissible_f5():
    curves = admissible_short_curves(5)
    assert len(curves) == 12
    assert all(a and b and (4 * a**3 + 27 * b * b) % 5 for a, b in curves)


def test_a3_special():
    chk = a3_special(1, 1)
    assert chk.enumerated == -2 and chk.formula == -2
    assert all(a3_special(a, b).match for a in (1, 2) for b in (1, 2))
