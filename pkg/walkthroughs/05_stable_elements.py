"""
Stable elements in degree one
=============================

Homomorphisms S -> Z/p that are constant along every fusion morphism form
a subspace of Hom(S, F_p).  Its dimension matches the rank of Hom(G, F_p)
computed from the abelianization of G.
"""

from fusionscope import build_text, fusion_system, h1_mod_p, stable_h1
from fusionscope.equivalence import frattini_coordinates

for text, p in [("S(4)", 2), ("A(4)", 2), ("A(4)", 3), ("S(3)xZ(4)", 2), ("A(5)", 2)]:
    G = build_text(text)
    F = fusion_system(G, p)
    dim, basis = stable_h1(F)
    full = frattini_coordinates(F.sylow, p).rank
    print(f"{text:10s} p={p}: Hom(S,F_p) has dim {full}, stable part {dim}, h1 {h1_mod_p(G, p)}")
