"""
Homology of branched cyclic covers
==================================

H_1 of the q-fold branched cover is presented by G^q - (G - I)^q. Its
order matches |Res(t^q - 1, Delta)|, and for the twisted doubles D_k it is
a squared Lucas-type number.
"""

from knotcg import twisted_doubles as td
from knotcg.branched_covers import (
    cover_homology,
    homology_order,
    lucas_order,
    p_primary,
    resultant,
    t_power_minus_one,
)
from knotcg.core_forms import alexander

D1 = td.double_seifert(1)
H = cover_homology(D1, 2)
print("double cover of D_1: Smith form", H.snf_diagonal, "order", H.order)

for q in (3, 5, 7):
    F = td.double_seifert(2)
    print(f"q = {q}: order {homology_order(F, q)}, "
          f"resultant {abs(resultant(t_power_minus_one(q), alexander(F)))}, "
          f"Lucas {lucas_order(2, q)}")

# the 7-primary part of the 3-fold cover of D_2
G = p_primary(cover_homology(td.double_seifert(2), 3).kernel(), 7)
print("7-primary orders:", G.orders)
for g in G.generators:
    print("  generator", g.to_json())
