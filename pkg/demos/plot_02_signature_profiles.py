"""
Tristram-Levine signature profiles
==================================

The signature function r -> sigma_r(K) is a symmetric step function.
Profiles computed from a Seifert matrix locate every jump exactly, using
rational breakpoints where the Alexander polynomial has cyclotomic factors
and isolating intervals elsewhere.
"""

from fractions import Fraction

from knotcg import signature_profiles as sp
from knotcg.torus_signatures import profile_T2, profile_Tll1, seifert_T2n, sigma_T2

# T(2,7) from its Seifert matrix and from the torus-knot jump formula
P = sp.profile_from_seifert(seifert_T2n(7))
print("plateaus of T(2,7):", P.plateaus)
print("agrees with the jump formula:", P == profile_T2(3))
print("closed form at 1/3:", sigma_T2(3, Fraction(1, 3)), "profile:", sp.evaluate(P, Fraction(1, 3)))

# a knot whose Alexander polynomial has no cyclotomic factor: jumps are irrational
Q = sp.profile_from_seifert([[2, 1], [0, 1]])  # Delta = 2t^2 - 3t + 2
for b in Q.breakpoints:
    print(f"jump in [{float(b.lo):.12f}, {float(b.hi):.12f}], width {float(b.hi - b.lo):.1e}")

# profiles add under connected sum and negate under mirroring
S = sp.add(profile_T2(1), sp.negate(profile_Tll1(3)))
print("minimum of T(2,3) # -T(3,-4):", sp.minimum(S))
