from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotcg import signature_profiles as sp
from knotcg.torus_signatures import (
    TorusKnotId,
    jump_f,
    profile_T2,
    profile_Tll1,
    seifert_T2n,
    sigma_T2,
    sigma_Tll1,
    torus_jumps,
)

F = Fraction
rationals = st.fractions(min_value=0, max_value=1, max_denominator=500)


def test_jump_f_examples():
    assert jump_f(2, 3, F(1, 6)) == -1
    assert jump_f(2, 3, F(1, 4)) == 0
    for k in range(1, 8):
        for d in range(1, k + 1):
            assert jump_f(2, 2 * k + 1, F(2 * d - 1, 2 * (2 * k + 1))) == -1
    with pytest.raises(ValueError):
        jump_f(2, 4, F(1, 8))
    with pytest.raises(ValueError):
        jump_f(2, 3, F(3, 4))


def test_torus_knot_id():
    TorusKnotId(3, -4)
    with pytest.raises(ValueError):
        TorusKnotId(2, 4)


def test_sigma_T2_examples():
    assert sigma_T2(1, F(1, 3)) == -2
    assert sigma_T2(1, F(1, 6)) == -1
    assert sigma_T2(3, F(1, 13)) == -2
    assert sigma_T2(4, F(1, 2)) == -8


def test_sigma_Tll1_examples():
    assert sigma_Tll1(3, F(1, 4)) == 4
    assert sigma_Tll1(4, F(2, 5)) == 10
    assert sigma_Tll1(2, F(1, 3)) == 2
    assert sp.evaluate(profile_Tll1(2), F(1, 6)) == 1
    assert profile_Tll1(1) == sp.SignatureProfile.zero()
    assert sigma_Tll1(1, F(1, 3)) == 0


def test_profile_T2_trefoil():
    P = profile_T2(1)
    assert [b.value for b in P.breakpoints] == [F(1, 6), F(5, 6)]
    assert P.plateaus == (0, -2, 0)


@given(st.integers(1, 12), rationals)
def test_T2_closed_form_matches_profile(k, r):
    assert sigma_T2(k, r) == sp.evaluate(profile_T2(k), r)
    assert sigma_T2(k, r) == sigma_T2(k, 1 - r)


@given(st.integers(2, 9), rationals)
def test_Tll1_bounds(l, r):
    v = sigma_Tll1(l, r)
    assert v == sp.evaluate(profile_Tll1(l), r)
    assert v >= 0
    if F(1, l * (l + 1)) < r <= F(1, 2):
        assert v >= 2


@given(st.integers(2, 9), st.data())
def test_Tll1_bracketing(l, data):
    t = data.draw(st.integers(1, l // 2))
    r = data.draw(st.fractions(min_value=F(t - 1, l), max_value=F(t, l), max_denominator=300))
    v = sigma_Tll1(l, r)
    assert -2 * (t - 1) ** 2 + 2 * l * (t - 1) <= v <= -2 * t * t + 2 * (l + 1) * t - 2


def test_Tll1_plateau_values():
    # value at r = (t-1)/l and at r = t/(l+1)
    for l in range(2, 8):
        for t in range(1, l // 2 + 1):
            assert sigma_Tll1(l, F(t - 1, l)) == -2 * (t - 1) ** 2 + 2 * l * (t - 1)
            assert sigma_Tll1(l, F(t, l + 1)) == -2 * t * t + 2 * (l + 1) * t - 2
            assert sigma_Tll1(l, F(t, l)) == -2 * t * t + 2 * l * t


def test_torus_jumps_are_symmetric():
    J = torus_jumps(3, 4)
    table = dict(J.items)
    assert all(table[1 - r] == -j for r, j in J.items)


def test_seifert_T2n():
    assert seifert_T2n(3).matrix == ((-1, 1), (0, -1))
    assert sp.sigma_half(seifert_T2n(5)) == -4
    P = sp.profile_from_seifert(seifert_T2n(7))
    assert sp.evaluate(P, F(1, 3)) == -4
    assert P == profile_T2(3)
    with pytest.raises(ValueError):
        seifert_T2n(4)
