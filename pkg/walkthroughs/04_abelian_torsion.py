"""
Torsion coefficients of abelian groups
======================================

For a finite abelian group A the multiplicities n_k of Z/p^k in its
p-primary part are read off from |A[p^k]|.  Two abelian groups are
isomorphic exactly when these agree at every prime.
"""

from fusionscope import build_text, torsion_profile
from fusionscope.abelian import abelian_p_equivalent, counting_sequence, invariant_factors

A = build_text("Z(2)xZ(2)xZ(2)xZ(12)")
print("invariant factors:", invariant_factors(A))
print("log_p |A[p^k]|:", counting_sequence(A, 2))
print("profile at 2:", torsion_profile(A, 2))
print("profile at 3:", torsion_profile(A, 3))

# Same order 48, different presentations
B = build_text("Z(4)xZ(6)xZ(2)")
for other in ["Z(2)xZ(2)xZ(12)", "Z(8)xZ(6)"]:
    C = build_text(other)
    print("Z(4)xZ(6)xZ(2) vs", other, {p: abelian_p_equivalent(B, C, p) for p in [2, 3]})
