"""
The 2-fusion system of S4
=========================

Build S4, take a Sylow 2-subgroup (a dihedral group of order 8) and list
the conjugacy classes of its subgroups under S4.
"""

from fusionscope import build_text, diagram, fusion_system
from fusionscope.isomorphism import type_label
from fusionscope.render import diagram_to_dot, diagram_to_text

G = build_text("S(4)")
F = fusion_system(G, 2)
print("Sylow subgroup:", type_label(F.sylow), "of order", F.sylow.order)

# 10 subgroups of S fall into 7 classes.  Inside S4 the two transpositions
# of S are conjugate, and so are its three double transpositions, even
# though one of those is central in S
print(diagram_to_text(diagram(F)))

# The normal Klein four-group is the only essential subgroup: its
# automizer is the full S3 acting on its three involutions
for E in F.essentials:
    print("essential:", sorted(G.format(x) for x in E.members), "automizer", F.automizer_label(E))

# The same data as a DOT graph, ready for `dot -Tsvg`
print(diagram_to_dot(diagram(F), name="S4 at p=2"))
