"""
Deciding p-local equivalence
============================

Two groups are p-locally equivalent when some isomorphism between their
Sylow p-subgroups carries conjugations in one group to conjugations in the
other.  Cheap invariants are tried first; the isomorphism search runs last.
"""

from fusionscope import build_text, p_locally_equivalent
from fusionscope.isomorphism import are_isomorphic

pairs = [
    ("Z(2)", "S(3)", 2),
    ("Z(3)", "S(3)", 3),
    ("A(4)", "D(12)", 2),
    ("D(10)", "AGL(1,5)", 5),
]
for a, b, p in pairs:
    v = p_locally_equivalent(build_text(a), build_text(b), p)
    if v.equivalent:
        print(f"{a} ~ {b} at p={p}")
    else:
        print(f"{a} !~ {b} at p={p}: refuted by {v.refuted_by} {v.detail}")

# Two groups of order 24 with isomorphic centres of order 4 (but of
# different type) that agree at every prime without being isomorphic
G, H = build_text("S(3)xZ(4)"), build_text("Dic(12)xZ(2)")
print("isomorphic:", are_isomorphic(G, H))
for p in [2, 3, 5]:
    v = p_locally_equivalent(G, H, p)
    print(f"p={p}: equivalent={v.equivalent}")

# The witness is an explicit map between Sylow subgroups
v = p_locally_equivalent(G, H, 2)
for x, y in v.witness.as_dict().items():
    print(" ", G.format(x), "->", H.format(y))
