"""
p-nilpotency four ways
======================

A group is p-nilpotent when it has a normal p-complement.  The library
checks three other characterisations alongside and insists they agree.
"""

from fusionscope import build_text, nilpotency_report
from fusionscope.equivalence import p_nilpotency_criteria
from fusionscope.subgroups import prime_factors

for text in ["S(3)", "A(4)", "Dic(12)", "S(4)", "D(8)xZ(3)"]:
    G = build_text(text)
    for p in prime_factors(G.order):
        crit = p_nilpotency_criteria(G, p)
        print(f"{text:10s} p={p}: {crit}")
    r = nilpotency_report(G)
    print(f"{text:10s} nilpotent={r.nilpotent} (Sylow product iso={r.sylow_product_iso}, "
          f"p-nilpotent everywhere={r.all_p_nilpotent})")
