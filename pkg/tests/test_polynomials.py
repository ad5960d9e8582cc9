from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from knotcg import polynomials as poly
from knotcg.errors import ConstantPolynomial, ZeroPolynomial
from knotcg.polynomials import IntPolynomial

t = sympy.Symbol("t")
coeff_lists = st.lists(st.integers(-6, 6), min_size=1, max_size=6)
nonconstant = st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


def to_sympy(c):
    return sum(sympy.Integer(x) * t ** i for i, x in enumerate(c))


def from_sympy(expr):
    return [Fraction(int(x.p), int(x.q)) for x in reversed(sympy.Poly(expr, t).all_coeffs())]


def test_int_polynomial_arithmetic():
    p = IntPolynomial((1, -1, 1))
    q = IntPolynomial((0, 1))
    assert (p * q).coeffs == (0, 1, -1, 1)
    assert (p - p).is_zero()
    assert p(2) == 3
    assert (q ** 3).coeffs == (0, 0, 0, 1)
    assert IntPolynomial((0, 0, 2, 4)).strip_t() == (IntPolynomial((2, 4)), 2)
    assert IntPolynomial.from_json(p.to_json()) == p
    assert IntPolynomial((3, 0, 0)).degree == 0


@given(coeff_lists, coeff_lists)
def test_multiplication_matches_sympy(a, b):
    got = poly.pmul(a, b)
    want = sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(got) == want


@given(coeff_lists, nonconstant)
def test_divmod_identity(a, b):
    q, r = poly.pdivmod(a, b)
    assert len(r) < len(b)
    assert poly._strip(poly.padd(poly.pmul(q, b), r)) == poly._strip([Fraction(x) for x in a])


@given(nonconstant, nonconstant)
def test_gcd_matches_sympy(a, b):
    got = poly.pgcd(a, b)
    want = sympy.Poly(sympy.gcd(to_sympy(a), to_sympy(b)), t).monic()
    assert got == [Fraction(int(x.p), int(x.q)) for x in reversed(want.all_coeffs())]


@given(nonconstant, nonconstant)
def test_ext_gcd_identity(a, b):
    g, s, u = poly.ext_gcd(a, b)
    assert poly._strip(poly.padd(poly.pmul(s, a), poly.pmul(u, b))) == g
    assert g == poly.pgcd(a, b)


@given(nonconstant, nonconstant)
def test_resultant_matches_sympy(a, b):
    # sympy.resultant drops the sign in some degenerate cases (e.g. t + 1, t^3),
    # so the sign is checked against sympy's own Sylvester matrix instead
    from sympy.polys.subresultants_qq_zz import sylvester
    got = poly.resultant(a, b)
    assert abs(got) == abs(sympy.resultant(to_sympy(a), to_sympy(b), t))
    assert got == sylvester(to_sympy(a), to_sympy(b), t, 1).det()


@given(nonconstant, nonconstant)
def test_resultant_swap_sign(a, b):
    m, n = len(a) - 1, len(b) - 1
    assert poly.resultant(a, b) == (-1) ** (m * n) * poly.resultant(b, a)


def test_resultant_examples():
    assert abs(poly.resultant([-1, 0, 0, 1], [-1, 3, -1])) == 16
    assert poly.resultant([1, 1], [0, 0, 0, 1]) == -1
    assert poly.resultant([1, 2, 1], [1, 2, 1]) == 0
    with pytest.raises(ConstantPolynomial):
        poly.resultant([3], [1, 1])


@pytest.mark.parametrize("d", range(1, 40))
def test_cyclotomic_matches_sympy(d):
    assert to_sympy(poly.cyclotomic(d)) == sympy.cyclotomic_poly(d, t)
    assert len(poly.cyclotomic(d)) - 1 == poly.euler_phi(d) == sympy.totient(d)


def test_cyclotomic_factors():
    a = poly.pmul(poly.pmul(poly.cyclotomic(6), poly.cyclotomic(6)), [2, 0, 1])
    assert poly.cyclotomic_factors(a) == {6: 2}
    assert poly.cyclotomic_factors([-1, 0, 0, 0, 0, 0, 1]) == {1: 1, 2: 1, 3: 1, 6: 1}
    with pytest.raises(ZeroPolynomial):
        poly.cyclotomic_factors([])


@settings(max_examples=60)
@given(nonconstant)
def test_root_isolation_counts_match_sympy(a):
    sqf = poly.squarefree(a)
    if len(sqf) < 2:
        return
    B = poly.root_bound(sqf)
    intervals = poly.isolate_real_roots(sqf, -B, B)
    roots = sympy.Poly(to_sympy(sqf), t).real_roots()
    assert len(intervals) == len(roots)
    for (lo, hi), r in zip(intervals, sorted(roots)):
        assert lo < r <= hi
    seq = poly.sturm_sequence(sqf)
    for lo, hi in intervals:
        l2, h2 = poly.refine_root(seq, lo, hi)
        assert h2 - l2 == (hi - lo) / 2
        assert poly.count_roots(seq, l2, h2) == 1


def test_squarefree_and_primitive():
    a = poly.pmul(poly.pmul([1, 1], [1, 1]), [-2, 1])
    assert poly.squarefree(a) == [-2, -1, 1]
    assert poly.primitive([Fraction(1, 2), Fraction(-1, 3)]) == [-3, 2]
    assert poly.divides([1, 1], a)
    assert not poly.divides([2, 1], a)


def test_binomial_real_part():
    # Re((1 + iu)^4) = 1 - 6u^2 + u^4
    assert poly.binomial_real_part(4) == [1, 0, -6, 0, 1]


def test_interpolate_and_matrix_det():
    coeffs = poly.interpolate([0, 1, 2], [1, 2, 5])
    assert coeffs == [1, 0, 1]
    # det [[t, 1], [1, t]] = t^2 - 1
    got = poly.matrix_polynomial_det(lambda i, j, x: x if i == j else 1, 2, 2)
    assert got == [-1, 0, 1]


def test_compose_linear():
    # (2x + 1)^2 = 4x^2 + 4x + 1
    assert poly._strip(poly.compose_linear([0, 0, 1], 2, 1)) == [1, 4, 4]


def test_poly_at_matrix():
    M = ((0, 1), (-1, 1))
    # x^2 - x + 1 annihilates its companion matrix
    assert poly.poly_at_matrix([1, -1, 1], M) == ((0, 0), (0, 0))
