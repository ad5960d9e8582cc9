"""
Concordance obstructions for twisted doubles
============================================

The q = 2 table, the lattice minimum, and the ribbon and slice verdicts
for sums of twisted doubles D_k(K).
"""

from knotcg import signature_profiles as sp
from knotcg import twisted_doubles as td
from knotcg.torus_signatures import profile_T2

U = sp.SignatureProfile.zero()

print("k  r      value")
for k, s, n, v in td.q2_table([1, 2, 3], U):
    print(f"{k}  {s}/{n:<4} {v}")

res = td.minmax_bounds(5, U)
print("minimum over the lattice for k = 5:", res.min_value, "at", res.argmin)

for k in (-2, 0, 1, 3, 7):
    print(f"ribbon verdict for 2 D_{k}:", td.ribbon_obstruction_verdict(2, k, U).verdict.value)

trefoil = profile_T2(1)
for l in (1, 2, 3):
    rep = td.slice_obstruction_verdict(2, l, trefoil)
    print(f"slice verdict for 2 D_{l * (l + 1)}(T(2,3)):", rep.verdict.value)
    for entry in rep.certificate[:3]:
        print("    ", entry.character, entry.value, entry.tag)

ind = td.independence_certificate([(2, 1), (3, 1), (4, 1)], U)
print("independent doubles:", ind.certified)
