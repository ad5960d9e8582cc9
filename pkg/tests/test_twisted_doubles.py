from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import primefactors

from conftest import unknot
from knotcg import linalg
from knotcg import signature_profiles as sp
from knotcg import twisted_doubles as td
from knotcg.casson_gordon import sigma1_tau
from knotcg.core_forms import find_rank1_metabolizers, isometric_structure
from knotcg.errors import BadPrime, DuplicateTwist, NoWitness
from knotcg.torus_signatures import profile_T2, profile_Tll1, sigma_T2

F = Fraction
V = td.Verdict
TREFOIL = profile_T2(1)


def test_seifert_matrices():
    assert td.double_seifert(1).matrix == ((-1, 1), (0, 1))
    assert td.naik_basis_double(1).matrix == ((5, 3), (2, 1))
    assert td.double_seifert(0).matrix == ((-1, 1), (0, 0))
    for k in range(-5, 12):
        P = td.NAIK_CHANGE
        A = linalg.matmul(linalg.matmul(linalg.transpose(P), td.double_seifert(k).matrix), P)
        assert A == td.naik_basis_double(k).matrix == ((4 * k + 1, 2 * k + 1), (2 * k, k))


def test_levine_class():
    C = td.LevineClass
    assert td.levine_class(-1) is C.InfiniteOrder
    assert td.levine_class(6) is C.AlgSlice
    assert td.levine_class(5) is C.Order4
    assert td.levine_class(1) is C.Order2
    assert td.levine_class(0) is C.AlgSlice
    # 4k+1 = 45 = 3^2 * 5: every prime 3 mod 4 has even exponent
    assert td.levine_class(11) is C.Order2


def test_eigen_metabolizers():
    plus, minus = td.eigen_metabolizers(2)
    assert plus.basis == ((3, 1),) and plus.eigenvalue == -2
    assert minus.basis == ((-2, 1),) and minus.eigenvalue == 3
    plus, minus = td.eigen_metabolizers(0)
    assert plus.basis == ((1, 1),) and plus.eigenvalue == 0
    assert minus.basis == ((0, 1),) and minus.eigenvalue == 1
    for l in range(0, 8):
        assert set(td.eigen_metabolizers(l)) == set(find_rank1_metabolizers(td.double_seifert(l * (l + 1))))


@pytest.mark.parametrize("l", [1, 2, 5])
@pytest.mark.parametrize("sign", [1, -1])
def test_eigen_seifert_basis(l, sign):
    A = td.eigen_seifert(l, sign).matrix
    assert A[0][0] == 0
    # same isometry class of G: trace 1, det -l(l+1)
    G = isometric_structure(A).matrix
    assert G[0][0] + G[1][1] == 1 and linalg.det(G) == -l * (l + 1)


def test_jx_profiles():
    assert td.jx_profile_algslice(1, unknot()) == sp.SignatureProfile.zero()
    assert td.jx_profile_algslice(3, TREFOIL) == sp.add(profile_Tll1(3), TREFOIL)
    assert td.jx_profile_general(1, unknot()) == profile_T2(1)
    assert sp.evaluate(td.jx_profile_general(1, TREFOIL), F(1, 12)) == -1


def test_double_profile_zero_for_nonnegative_k():
    for k in range(0, 10):
        assert td.double_profile(k) == sp.SignatureProfile.zero()
    assert td.double_profile(-1) == TREFOIL


def test_cg_double_q2_examples():
    assert td.cg_double_q2(1, unknot(), 5, 1) == F(-4, 5)
    assert td.cg_double_q2(1, unknot(), 5, 2) == F(4, 5)
    assert td.cg_double_q2(2, unknot(), 3, 1) == 2 * sigma_T2(2, F(1, 3)) + 8
    with pytest.raises(BadPrime):
        td.cg_double_q2(2, unknot(), 9, 2)
    with pytest.raises(BadPrime):
        td.cg_double_q2(1, unknot(), 3, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 25), st.sampled_from(["unknot", "trefoil", "mirror"]), st.data())
def test_cg_double_q2_matches_general_formula(k, name, data):
    comp = {"unknot": unknot(), "trefoil": TREFOIL, "mirror": sp.negate(profile_T2(2))}[name]
    p = data.draw(st.sampled_from(primefactors(4 * k + 1)))
    s = data.draw(st.integers(1, p - 1))
    general = sigma1_tau(td.naik_data(k, comp), 2, p, s).value
    assert td.cg_double_q2(k, comp, p, s) == general


def test_cg_double_algslice():
    assert td.cg_double_algslice(1, unknot(), 3, 7, 1, 1) == 0
    best = max(td.cg_double_algslice(2, unknot(), 3, 19, s, 1) for s in range(1, 19))
    assert best >= 6
    with pytest.raises(BadPrime):
        td.cg_double_algslice(2, unknot(), 3, 7, 1, 1)


@given(st.sampled_from([3, 5, 7]), st.data())
def test_cg_double_algslice_trivial_for_l1(q, data):
    h = 2 ** q - 1
    p = data.draw(st.sampled_from(primefactors(h)))
    s = data.draw(st.integers(1, p - 1))
    for sign in (1, -1):
        assert td.cg_double_algslice(1, unknot(), q, p, s, sign) == 0


def test_minmax_examples():
    res = td.minmax_bounds(3, unknot())
    assert res.min_value == F(-4, 13) and res.argmin == F(1, 13) and res.bound_ok
    assert res.values[F(6, 13)] == F(12, 13)
    res = td.minmax_bounds(10, unknot())
    assert res.min_value == F(-4, 41) and res.argmin == F(1, 41)
    assert all(v > 0 for r, v in res.values.items() if r not in (F(1, 41), F(40, 41)))
    min_value, argmin, ok = td.minmax_bounds(5, unknot())
    assert (min_value, argmin, ok) == (F(-4, 21), F(1, 21), True)
    with pytest.raises(ValueError):
        td.minmax_bounds(2, unknot())


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 40), st.sampled_from(["trefoil", "mirror", "sum"]))
def test_minmax_bound_any_companion(k, name):
    comp = {"trefoil": TREFOIL, "mirror": sp.negate(TREFOIL),
            "sum": sp.add(profile_T2(3), sp.negate(TREFOIL))}[name]
    assert td.minmax_bounds(k, comp).bound_ok


def test_quadratic_lower_bound():
    for k in range(3, 30):
        n = 4 * k + 1
        g = lambda s: td.quadratic_lower_bound(k, F(s, n))  # noqa: E731
        assert g(2 * k) == -1
        assert g(1) == g(2 * k - 1) == F(-3, n)
        assert g(2) == g(2 * k - 2) == F(4 * k - 9, n)
        for s in range(1, 2 * k + 1):
            r = F(s, n)
            f = sigma_T2(k, r) + 2 * r * (1 - r) * n
            assert g(s) <= f


def test_structured_character_bound():
    # with M >= 0 the structured value exceeds cs - 2 or cs - c/2 - 2
    for k in range(3, 40):
        for p in primefactors(4 * k + 1):
            s = td.structured_s(p)
            c = F(4 * k + 1, p)
            bound = c * s - 2 if p == 4 * s + 1 else c * s - c / 2 - 2
            assert td.cg_double_q2(k, unknot(), p, s) > bound


def test_find_k0():
    C0 = 10
    k0 = td.find_k0(5, unknot(), C0, k_max=200)
    assert k0 is not None
    s = td.structured_s(5)
    for k in range(k0, 201):
        if (4 * k + 1) % 5 == 0:
            assert td.cg_double_q2(k, unknot(), 5, s) > C0
    below = [k for k in range(1, k0) if (4 * k + 1) % 5 == 0]
    if below:
        assert td.cg_double_q2(below[-1], unknot(), 5, s) <= C0


def test_estimate_b_search():
    s, achieved = td.estimate_b_search(2, 3, 19, 1, 0)
    assert achieved > 0
    assert achieved == sum(
        td.sigma_Tll1(2, F(si, 19)) for si in td.s_sequence(-3, 19, s, 3))
    with pytest.raises(NoWitness):
        td.estimate_b_search(2, 3, 19, 1, 1000)


def test_ribbon_verdicts():
    for n in range(1, 5):
        rep = td.ribbon_obstruction_verdict(n, 3, unknot())
        assert rep.verdict is V.NonVanishing
    assert td.ribbon_obstruction_verdict(1, 1, unknot()).verdict is V.Inconclusive
    assert td.ribbon_obstruction_verdict(1, -2, TREFOIL).verdict is V.InfiniteAlgebraicOrder
    assert td.ribbon_obstruction_verdict(1, 0, unknot()).verdict is V.Inconclusive
    rep = td.ribbon_obstruction_verdict(2, 3, unknot())
    tags = [c.tag for c in rep.certificate]
    assert "value" in tags and "floor" in tags
    # the structured value at s = 3, p = 13 exceeds k - 2 = 1; the floor is -4/13
    assert rep.certificate[0].value > 1
    assert rep.certificate[1].value == F(-4, 13)


def test_slice_verdicts():
    for l in (2, 3):
        assert td.slice_obstruction_verdict(2, l, unknot()).verdict is V.NonVanishing
    assert td.slice_obstruction_verdict(1, 1, unknot(), max_q=13).verdict is V.Inconclusive
    assert td.slice_obstruction_verdict(1, 0, unknot()).verdict is V.Inconclusive
    # a companion with a positive plateau certifies l = 1
    rep = td.slice_obstruction_verdict(2, 1, sp.negate(TREFOIL), max_q=13)
    assert rep.verdict is V.NonVanishing


def test_slice_verdict_excluded_primes():
    rep = td.slice_obstruction_verdict(1, 2, unknot(), exclude_primes=(19,))
    assert rep.verdict is V.NonVanishing
    assert all("p=19" not in c.character for c in rep.certificate)


def test_report_invariant():
    with pytest.raises(AssertionError):
        td.ObstructionReport(V.NonVanishing, (td.CertificateEntry("x", F(-1), "bound: n"),))
    rep = td.ribbon_obstruction_verdict(1, 3, unknot())
    js = rep.to_json()
    assert js["verdict"] == "NonVanishing"
    assert all(isinstance(c["value"], str) for c in js["certificate"])


def test_independence_certificate():
    rep = td.independence_certificate([(2, 1), (3, 1), (4, 1)], unknot())
    assert rep.certified == (2, 3, 4) and rep.inconclusive == ()
    assert all(ok for _, _, ok in rep.coprime_pairs)
    rep = td.independence_certificate([(0, 1)], unknot())
    assert rep.inconclusive == (0,)
    with pytest.raises(DuplicateTwist):
        td.independence_certificate([(2, 1), (2, 3)], unknot())


def test_double_spec():
    spec = td.DoubleSpec(3, sp.negate(profile_T2(2)))
    assert spec.companion_min == 0
    assert td.DoubleSpec(3, TREFOIL).companion_min == -4


def test_q2_table():
    rows = td.q2_table([1, 2], unknot())
    assert [(k, s, n) for k, s, n, _ in rows] == [(1, 1, 5), (1, 2, 5), (2, 1, 9), (2, 2, 9), (2, 3, 9), (2, 4, 9)]
    assert [v for *_, v in rows] == [F(-2, 5), F(2, 5), F(-2, 9), F(10, 9), F(0), F(4, 9)]
    # with a companion the sigma_{2r}(K) term is removed again
    rows_t = td.q2_table([1, 2], TREFOIL)
    for (k, s, n, v), (_, _, _, w) in zip(rows, rows_t):
        assert v == w
