"""
Casson-Gordon signatures of genus-one knots
===========================================

For a genus-one Seifert matrix [[a, -m], [-(m+1), b]] and a character
x (x) s/d, the invariant sigma_1 tau is a finite sum of signatures of
the band knot J_x plus an explicit quadratic correction.
"""

from fractions import Fraction

from knotcg import signature_profiles as sp
from knotcg import twisted_doubles as td
from knotcg.casson_gordon import Genus1Data, sigma1_tau
from knotcg.torus_signatures import profile_T2

# D_1 in a basis where the first band is T(2,3) with a = 5
data = td.naik_data(1, sp.SignatureProfile.zero())
for s in (1, 2):
    v = sigma1_tau(data, 2, 5, s)
    print(f"s = {s}: sigma_1 tau = {v.value}")
    for t in v.terms:
        print(f"    i={t.i} s_i={t.s_i} J_x={t.jx} quadratic={t.quadratic} knot={t.knot}")

# the same matrix with a different band knot
other = Genus1Data(5, -3, 1, data.knot_profile, profile_T2(2))
print("with J_x = T(2,5):", sigma1_tau(other, 2, 5, 1).value)

# the algebraically slice double D_6 and its eigen-basis, q = 3, p = 19
best = max(range(1, 19), key=lambda s: td.cg_double_algslice(2, sp.SignatureProfile.zero(), 3, 19, s, 1))
value = td.cg_double_algslice(2, sp.SignatureProfile.zero(), 3, 19, best, 1)
print(f"largest orbit sum for D_6 with p = 19: {value} at s/p = {Fraction(best, 19)}")
