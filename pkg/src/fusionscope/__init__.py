"""Fusion systems of small finite permutation groups.

Typical use::

    from fusionscope import build_text, fusion_system, p_locally_equivalent

    G = build_text("S(4)")
    F = fusion_system(G, 2)
    p_locally_equivalent(build_text("A(4)"), build_text("D(12)"), 2)
"""

from .abelian import TorsionProfile, abelian_p_equivalent, primary_component, torsion_profile
from .alperin import AlperinFactorization, alperin_decompose, verify_factorization
from .catalog import CATALOG, build, build_text, parse
from .config import limits
from .equivalence import (
    EquivalenceVerdict,
    cc_p,
    h1_mod_p,
    is_p_nilpotent,
    nilpotency_report,
    p_locally_equivalent,
    preserves_fusion_fast,
    preserves_fusion_naive,
    stable_h1,
)
from .errors import (
    ArityError,
    BadPermutation,
    CapExceeded,
    CriteriaDisagree,
    DomainError,
    ExprSyntaxError,
    ForeignSubgroup,
    FusionscopeError,
    NotAbelian,
    NotAFusionMorphism,
    NotNormal,
    SearchExhausted,
)
from .fusion import (
    FusionDiagram,
    FusionSystem,
    diagram,
    essential_subsystem,
    fusion_system,
    has_strongly_p_embedded,
    hom_G,
)
from .group import Group, Morphism, Subgroup, group_from_generators
from .subgroups import (
    abelianization,
    all_subgroups,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    is_nilpotent,
    lower_central_series,
    normalizer,
    quotient,
    sylow,
    transporter,
)

__version__ = "0.1.0"
