import json
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import seifert_forms
from knotcg import signature_profiles as sp
from knotcg.core_forms import block_sum, mirror, validate_seifert
from knotcg.errors import AsymmetricJumps, KnotCGError, OutOfRange
from knotcg.signature_profiles import Breakpoint, JumpList, SignatureProfile

F = Fraction
TREFOIL = ((-1, 1), (0, -1))
rationals = st.fractions(min_value=0, max_value=1, max_denominator=300)


def trefoil():
    return sp.profile_from_jumps(JumpList(((F(1, 6), -2), (F(5, 6), 2))))


def D(k):
    return validate_seifert([[-1, 1], [0, k]])


def test_profile_from_jumps():
    P = trefoil()
    assert [b.value for b in P.breakpoints] == [F(1, 6), F(5, 6)]
    assert P.plateaus == (0, -2, 0)
    assert sp.profile_from_jumps(JumpList(())) == SignatureProfile.zero()
    with pytest.raises(AsymmetricJumps):
        sp.profile_from_jumps(JumpList(((F(1, 6), -2),)))
    with pytest.raises(KnotCGError):
        JumpList(((F(1, 6), -1), (F(5, 6), 1)))


def test_eval():
    P = trefoil()
    assert sp.evaluate(P, F(1, 3)) == -2
    assert sp.evaluate(P, F(1, 6)) == -1
    assert sp.evaluate(P, 0) == 0 and sp.evaluate(P, 1) == 0
    assert sp.eval(P, F(1, 2)) == P.eval(F(1, 2)) == -2
    with pytest.raises(OutOfRange):
        sp.evaluate(P, F(3, 2))


def test_add_negate():
    P = trefoil()
    assert sp.add(P, SignatureProfile.zero()) == P
    assert sp.add(P, sp.negate(P)) == SignatureProfile.zero()
    assert sp.evaluate(sp.add(P, P), F(1, 3)) == -4
    assert P + P == sp.sum_profiles([P, P])
    assert -P == sp.negate(P)


def test_satellite_pullback():
    P = trefoil()
    Z = SignatureProfile.zero()
    assert sp.satellite_pullback(P, 0, Z) == Z
    assert sp.satellite_pullback(P, 1, P) == sp.add(P, P)
    S = sp.satellite_pullback(P, 2, Z)
    assert sp.evaluate(S, F(1, 12)) == -1
    assert sp.evaluate(S, F(1, 4)) == -2
    assert [b.value for b in S.breakpoints] == [F(1, 12), F(5, 12), F(7, 12), F(11, 12)]


@settings(max_examples=40, deadline=None)
@given(rationals)
def test_satellite_pullback_pointwise(r):
    P = trefoil()
    orbit = sp.profile_from_seifert(D(-2))
    S = sp.satellite_pullback(P, 3, orbit)
    assert sp.evaluate(S, r) == sp.evaluate(P, (3 * r) % 1) + sp.evaluate(orbit, r)


def test_profile_from_seifert_examples():
    P = sp.profile_from_seifert(TREFOIL)
    assert P == trefoil()
    for k in range(0, 8):
        assert sp.evaluate(sp.profile_from_seifert(D(k)), F(1, 2)) == 0
    # a = 0 forms have zero profile
    assert sp.profile_from_seifert([[0, 2], [1, -1]]) == SignatureProfile.zero()


def test_irrational_breakpoints():
    P = sp.profile_from_seifert(D(-3))
    assert not P.is_exact()
    assert len(P.breakpoints) == 2
    b = P.breakpoints[0]
    assert b.hi - b.lo <= sp.DISPLAY_WIDTH
    # compare against an exact rational and refine further
    assert sp.compare_breakpoints(b, Breakpoint.exact(F(1, 2))) == -1
    finer = b.refined()
    assert b.lo <= finer.lo and finer.hi <= b.hi
    assert sp.evaluate(P, F(1, 2)) == sp.sigma_half(D(-3))


def test_sigma_half():
    assert sp.sigma_half(TREFOIL) == -2
    assert sp.sigma_half(D(-1)) == -2
    for k in range(0, 20):
        assert sp.sigma_half(D(k)) == 0


def test_is_singular_at():
    assert sp.is_singular_at(TREFOIL, F(1, 6))
    assert not sp.is_singular_at(TREFOIL, F(1, 5))
    for k in range(1, 51):
        assert not any(sp.is_singular_at(D(k), F(s, 4 * k + 1)) for s in range(1, 4 * k + 1))


@settings(max_examples=40, deadline=None)
@given(seifert_forms(max_genus=3), rationals)
def test_profile_matches_numeric(Fm, r):
    assume(0 < r < 1)
    P = sp.profile_from_seifert(Fm)
    assert P.plateaus[0] == 0 and all(v % 2 == 0 for v in P.plateaus)
    assert sp.evaluate(P, r) == sp.evaluate(P, 1 - r)
    if sp.is_singular_at(Fm, r):
        return
    try:
        numeric = sp.signature_numeric(Fm, r)
    except KnotCGError:
        return
    assert sp.evaluate(P, r) == numeric


@settings(max_examples=25, deadline=None)
@given(seifert_forms(max_genus=2), seifert_forms(max_genus=1))
def test_block_sum_and_mirror(F1, F2):
    P1, P2 = sp.profile_from_seifert(F1), sp.profile_from_seifert(F2)
    assert sp.profile_from_seifert(block_sum(F1, F2)) == sp.add(P1, P2)
    assert sp.profile_from_seifert(mirror(F1)) == sp.negate(P1)


def test_json_roundtrip():
    rng = random.Random(3)
    from conftest import random_seifert
    for _ in range(10):
        P = sp.profile_from_seifert(random_seifert(rng, rng.randint(1, 3)))
        text = json.dumps(P.to_json())
        assert SignatureProfile.from_json(json.loads(text)) == P
        assert json.dumps(SignatureProfile.from_json(json.loads(text)).to_json()) == text
    data = trefoil().to_json()
    assert data[0] == {"plateau_first": 0}
    assert data[1] == {"breakpoint": [1, 6], "plateau_after": -2}


def test_profile_invariants_enforced():
    b = Breakpoint.exact
    with pytest.raises(KnotCGError):
        SignatureProfile((b(F(1, 3)),), (2, 0))
    with pytest.raises(AsymmetricJumps):
        SignatureProfile((b(F(1, 3)), b(F(1, 2))), (0, 2, 0))
    with pytest.raises(KnotCGError):
        SignatureProfile((b(F(1, 3)), b(F(2, 3))), (0, 0, 0))


def test_tangent_polynomial_roots_are_breakpoints():
    # Delta of T(2,5) is Phi_10; roots at angles 1/10 and 3/10
    P = sp.profile_from_seifert([[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]])
    assert [b.value for b in P.breakpoints] == [F(1, 10), F(3, 10), F(7, 10), F(9, 10)]
    assert P.plateaus == (0, -2, -4, -2, 0)
