"""
Factoring conjugations
======================

Every conjugation map between subgroups of S is a composite of
automorphisms of S and of essential subgroups.  A breadth-first search
finds a shortest such factorization and a checker confirms it.
"""

from fusionscope import alperin_decompose, build_text, fusion_system, verify_factorization
from fusionscope.group import conjugation
from fusionscope.perm import from_cycles
from fusionscope.render import subgroup_label

G = build_text("S(4)")
F = fusion_system(G, 2)

a = G.index(from_cycles([(0, 1), (2, 3)], 4))
g = G.index(from_cycles([(1, 2)], 4))
fac = alperin_decompose(F, conjugation(G.generate([a]), g, F.sylow))
print("steps:", [subgroup_label(s.R) for s in fac.steps])
print("path:", " -> ".join(subgroup_label(Q) for Q in fac.intermediates))
print("verified:", verify_factorization(F, fac))

lengths = {}
for P in F.objects:
    for f in F.hom_to_sylow(P):
        n = len(alperin_decompose(F, f).steps)
        lengths[n] = lengths.get(n, 0) + 1
print("morphisms by number of steps:", dict(sorted(lengths.items())))
