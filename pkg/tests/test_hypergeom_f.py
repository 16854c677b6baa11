import pytest

from gammatrace.elliptic import WeierstrassCurve, admissible_short_curves, ap_enumerate
from gammatrace.errors import WrongCongruenceClass
from gammatrace.hypergeom_f import CharTuple, f4_modular, f_eval, lennon_chars, lennon_trace
from gammatrace.hypergeom_g import g4_modular, g_eval
from gammatrace.modforms import c
from gammatrace.padic import centered_lift


def test_char_tuple_canonical():
    ch = CharTuple((-1, 13), (25,), 13)
    assert ch.upper_indices == (11, 1) and ch.lower_indices == (1,)
    assert ch.order(3) == 4 and ch.order(0) == 1
    with pytest.raises(ValueError):
        CharTuple((1,), (1,), 13)


def test_zero_argument():
    assert f_eval(lennon_chars(13), 0, 13, 2).is_zero


def test_lennon_examples():
    value, choices = lennon_trace(1, 1, 13)
    assert value == ap_enumerate(WeierstrassCurve.short(1, 1, 13))
    assert set(choices) == {1, 5, 7, 11}
    value, _ = lennon_trace(1, 2, 37)
    assert value == ap_enumerate(WeierstrassCurve.short(1, 2, 37))
    with pytest.raises(WrongCongruenceClass):
        lennon_trace(1, 1, 11)


def test_lennon_all_curves_p13():
    for a, b in admissible_short_curves(13):
        value, choices = lennon_trace(a, b, 13)
        assert value == ap_enumerate(WeierstrassCurve.short(a, b, 13))


@pytest.mark.parametrize("p", [13, 37])
def test_lemma_gf(p):
    chars = lennon_chars(p)
    params = chars.to_gparams()
    assert params.n == 2
    for t in range(1, p, 3):
        F = f_eval(chars, t, p, 2)
        G = g_eval(params, pow(t, -1, p), p, 2).value
        assert F.congruent(G)


def test_f4_examples():
    assert centered_lift(f4_modular(11, 3) - 11, 72) == c(11) == -43
    F = f4_modular(31, 2)
    assert F.congruent(g4_modular(31, 2).value)
    with pytest.raises(WrongCongruenceClass):
        f4_modular(7)
