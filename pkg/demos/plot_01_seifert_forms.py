"""
Seifert forms and Alexander polynomials
=======================================

A Seifert matrix A determines the isometric structure G = (A - A^T)^-1 A
and the Alexander polynomial det(A - t A^T). Everything here is exact.
"""

from knotcg.core_forms import (
    alexander,
    charpoly_identity_check,
    find_rank1_metabolizers,
    isometric_structure,
    mirror,
    validate_seifert,
)

# the trefoil T(2,3)
A = validate_seifert([[-1, 1], [0, -1]])
print("Alexander polynomial of the trefoil:", alexander(A).to_json())
print("isometric structure G:", isometric_structure(A).matrix)

# the characteristic polynomial of G is x^2g Delta(1 - 1/x), up to sign
print("charpoly identity holds:", charpoly_identity_check(A))

# mirroring sends A to -A^T
print("mirror:", mirror(A).matrix)

# the twisted double D_6 is algebraically slice: 4k + 1 = 25 is a square,
# so there are rank-one metabolizers
D6 = validate_seifert([[-1, 1], [0, 6]])
for Z in find_rank1_metabolizers(D6):
    print("metabolizer", Z.basis, "eigenvalue", Z.eigenvalue)
