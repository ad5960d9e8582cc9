"""Casson-Gordon signatures of genus-one knots.

For a genus-one Seifert matrix [[a, -m], [-(m+1), b]] with d | a and the
character chi = x (x) s/d in N^q, the rational invariant sigma_1 tau is

    sum_{i<q} sigma_{s_i/d}(J_x) + 2 (d - s_i) s_i a / d^2 - sigma_{i/q}(K),

where s_i = (1 + m*)^i s mod d, m* the inverse of m mod d, and J_x is
the knot type of the band x.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import signature_profiles as sp
from .branched_covers import CharacterQ, in_Nq
from .core_forms import find_rank1_metabolizers, validate_seifert
from .errors import (
    HypothesisFailed,
    MixedQ,
    MNotInvertible,
    SNotCoprime,
    StepHitsZero,
)

TRIVIAL = "trivial"


def prime_power_base(n):
    """p if n = p^e with e >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


@dataclass(frozen=True)
class Genus1Data:
    a: int
    m: int
    b: int
    knot_profile: sp.SignatureProfile
    jx_profile: sp.SignatureProfile

    @property
    def matrix(self):
        return ((self.a, -self.m), (-(self.m + 1), self.b))

    @property
    def form(self):
        return validate_seifert(self.matrix)


@dataclass(frozen=True)
class CGTerm:
    i: int
    s_i: int
    jx: Fraction
    quadratic: Fraction
    knot: Fraction  # already negated: -sigma_{i/q}(K)

    @property
    def total(self):
        return self.jx + self.quadratic + self.knot

    def to_json(self):
        f = lambda x: [x.numerator, x.denominator]  # noqa: E731
        return {"i": self.i, "s_i": self.s_i, "jx": f(self.jx),
                "quadratic": f(self.quadratic), "knot": f(self.knot)}


@dataclass(frozen=True)
class CGValue:
    value: Fraction
    terms: tuple = ()

    def __post_init__(self):
        if self.terms and sum(t.total for t in self.terms) != self.value:
            raise AssertionError("CG value differs from the sum of its terms")

    def to_json(self):
        return {"value": [self.value.numerator, self.value.denominator],
                "terms": [t.to_json() for t in self.terms]}


def s_sequence(m, d, s, q):
    """s_i = (1 + m*)^i s mod d for i < q, each in (0, d)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if gcd(m, d) != 1:
        raise MNotInvertible(f"m = {m} is not invertible mod {d}")
    if gcd(s, d) != 1:
        raise SNotCoprime(f"s = {s} is not coprime to {d}")
    step = (1 + pow(m, -1, d)) % d
    out = []
    x = s % d
    for i in range(q):
        if x == 0:
            raise StepHitsZero(f"s_{i} vanishes mod {d}")
        out.append(x)
        x = (x * step) % d
    return tuple(out)


def _check(data, q, d, s):
    if prime_power_base(q) is None:
        raise HypothesisFailed(f"q = {q} is not a prime power")
    if prime_power_base(d) is None:
        raise HypothesisFailed(f"d = {d} is not a prime power")
    if data.a % d:
        raise HypothesisFailed(f"d = {d} does not divide a = {data.a}")
    chi = CharacterQ((Fraction(s, d), Fraction(0)))
    if not in_Nq(data.form, q, chi):
        raise HypothesisFailed("x (x) s/d is not in N^q")


def sigma1_tau(data, q, d, s):
    """sigma_1 tau(K, chi) for chi = x (x) s/d, with the per-i breakdown."""
    _check(data, q, d, s)
    seq = s_sequence(data.m, d, s, q)
    terms = []
    for i, si in enumerate(seq):
        jx = sp.evaluate(data.jx_profile, Fraction(si, d))
        quad = Fraction(2 * (d - si) * si * data.a, d * d)
        knot = -sp.evaluate(data.knot_profile, Fraction(i, q))
        terms.append(CGTerm(i, si, jx, quad, knot))
    return CGValue(sum((t.total for t in terms), Fraction(0)), tuple(terms))


def sigma1_tau_q2(data, d, s):
    """The q = 2 shortcut 2 sigma_{s/d}(J_x) + 4 (d - s) s a / d^2 - sigma_{1/2}(K)."""
    _check(data, 2, d, s)
    if gcd(s, d) != 1:
        raise SNotCoprime(f"s = {s} is not coprime to {d}")
    r = Fraction(s % d, d)
    return (2 * sp.evaluate(data.jx_profile, r) + Fraction(4 * (d - s % d) * (s % d) * data.a, d * d)
            - sp.evaluate(data.knot_profile, Fraction(1, 2)))


def sigma1_tau_a0(data, q, d, s):
    """The a = 0 shortcut sum_i sigma_{s_i/d}(J_x).

    The knot terms of the general formula must vanish here; this is checked.
    """
    if data.a != 0:
        raise HypothesisFailed("the a = 0 shortcut needs a = 0")
    if ((data.m + 1) ** q - data.m ** q) % d:
        raise HypothesisFailed(f"d = {d} does not divide (m+1)^q - m^q")
    for i in range(q):
        if sp.evaluate(data.knot_profile, Fraction(i, q)) != 0:
            raise HypothesisFailed("knot signature terms do not vanish for a = 0")
    seq = s_sequence(data.m, d, s, q)
    return sum((sp.evaluate(data.jx_profile, Fraction(si, d)) for si in seq), Fraction(0))


def is_algebraically_slice(data):
    return bool(find_rank1_metabolizers(data.form))


def sigma1_tau_sum(pieces):
    """Sum of sigma_1 tau over a connected sum.

    ``pieces`` holds tuples (data, q, d, s); use ``d = s = None`` or
    ``s = TRIVIAL`` for the trivial character, which contributes 0 on an
    algebraically slice piece.
    """
    qs = {piece[1] for piece in pieces}
    if len(qs) > 1:
        raise MixedQ(f"pieces use different q: {sorted(qs)}")
    total = Fraction(0)
    for data, q, d, s in pieces:
        if s is None or s == TRIVIAL or (d is not None and s % d == 0):
            if not is_algebraically_slice(data):
                raise HypothesisFailed("trivial character on a piece that is not algebraically slice")
            continue
        total += sigma1_tau(data, q, d, s).value
    return total
