from fractions import Fraction

import pytest

from gammatrace.elliptic import ap_enumerate, WeierstrassCurve
from gammatrace.errors import BadParameterDenominator, EvenPrime
from gammatrace.hypergeom_g import (
    G4_PARAMS,
    P3_PARAMS,
    TRACE_PARAMS,
    GParams,
    delta_bound,
    exponents,
    g4_modular,
    g_eval,
    g_eval_rational,
    observed_valuations,
)
from gammatrace.modforms import c
from gammatrace.padic import centered_lift


def test_zero_argument():
    for params in (TRACE_PARAMS, G4_PARAMS):
        v = g_eval(params, 0, 7, 2).value
        assert v.is_zero


def test_trace_instance_p5():
    # y^2 = x^3 + x + 1 over F_5 has a_5 = -3, t = -27/4 = 2 mod 5
    res = g_eval(TRACE_PARAMS, 2, 5, 2)
    assert res.valuation == -1
    assert centered_lift(res.value * 5, 4) == -3
    assert ap_enumerate(WeierstrassCurve.short(1, 1, 5)) == -3


def test_g4_at_p3():
    # c(3) + (5/3) * 3 with (5/3) = -1
    v = g4_modular(3, 2).value
    assert v.valuation >= 0
    assert v.residue() == (c(3) - 3) % 9


def test_delta_examples():
    assert delta_bound(TRACE_PARAMS, 13) == -1
    f = exponents(TRACE_PARAMS, 13)
    assert min(f) == f[8] == -1
    assert delta_bound(GParams((0,), (0,)), 7) <= 0
    # f(j) = -1 for j >= 2 at p = 5: the lower threshold <1/2>* = 1/2 is reached together with the upper one
    assert delta_bound(GParams((Fraction(1, 2),), (Fraction(1, 2),)), 5) == -1


def test_bad_denominator():
    with pytest.raises(BadParameterDenominator):
        g_eval(G4_PARAMS, 1, 5, 2)


def test_even_prime():
    with pytest.raises(EvenPrime):
        g_eval(TRACE_PARAMS, 1, 2, 2)


def test_params_canonicalized():
    a = GParams.parse("1/4,3/4", "1/3,2/3")
    b = GParams.parse("-3/4,7/4", "4/3,-1/3")
    assert a == b == TRACE_PARAMS
    assert str(a) == "[1/4, 3/4; 1/3, 2/3]"


def test_mismatched_lengths():
    with pytest.raises(ValueError):
        GParams.parse("1/2", "1/3,2/3")


def test_rational_argument():
    a = g_eval_rational(TRACE_PARAMS, Fraction(-27, 4), 5, 2).value
    b = g_eval(TRACE_PARAMS, 2, 5, 2).value
    assert a.congruent(b)


@pytest.mark.parametrize("p", [7, 13, 29])
def test_guard_digits_do_not_change_value(p):
    for t in range(1, p):
        base = g_eval(TRACE_PARAMS, t, p, 2).value
        more = g_eval(TRACE_PARAMS, t, p, 2, guard=2).value
        assert base.congruent(more)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_trace_instance_is_p_integral(p):
    for t in range(1, p):
        v = g_eval(TRACE_PARAMS, t, p, 2).valuation
        assert v >= delta_bound(TRACE_PARAMS, p) and v + 1 >= 0


def test_p3_parameters():
    # a = b = 1: -a/b = 2 mod 3, and a_3 = -2
    v = g_eval(P3_PARAMS, 2, 3, 2).value
    assert centered_lift(v, 3) == -2


def test_observed_valuations_respect_bound():
    params = GParams.parse("1/3,1/2,5/6", "0,1/4,3/4")
    obs = observed_valuations(params, 13, 2)
    assert min(obs) >= delta_bound(params, 13)
