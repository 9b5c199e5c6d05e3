"""p-local equivalence, p-nilpotency, nilpotency and degree-one invariants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .abelian import torsion_profile
from .errors import CriteriaDisagree
from .fusion import FusionSystem, fusion_system
from .group import Group, Morphism, Subgroup, direct_product
from .isomorphism import are_isomorphic, find_isomorphism, fingerprint, iter_isomorphisms
from .subgroups import (
    abelianization,
    all_subgroups,
    as_subgroup,
    centralizer,
    conjugacy_classes,
    frattini_like,
    is_nilpotent,
    normal_subgroups,
    normalizer,
    p_part,
    prime_factors,
    quotient,
    sylow,
)

TAGS = ("p-part", "sylow-iso", "cc_p", "automizer-S", "essential-profile", "exhausted-search")


@dataclass
class EquivalenceVerdict:
    equivalent: bool
    witness: Morphism | None = None
    refuted_by: str | None = None
    detail: tuple | None = None  # the two mismatching invariant values

    def __post_init__(self):
        if self.equivalent and (self.witness is None or self.refuted_by is not None):
            raise ValueError("a positive verdict needs a witness and no refutation")
        if self.refuted_by is not None and self.refuted_by not in TAGS:
            raise ValueError(f"unknown refuting invariant {self.refuted_by!r}")

    def __bool__(self):
        return self.equivalent


# -- conjugacy classes of p-elements -------------------------------------


def cc_p_counts(G, p: int) -> tuple[int, int]:
    """cc_p computed two ways: via S/~G and via the classes of G."""
    A = as_subgroup(G)
    grp = A.group
    S = sylow(A, p)
    seen = np.zeros(grp.order, dtype=bool)
    by_sylow = 0
    for x in S.members:
        if seen[x]:
            continue
        by_sylow += 1
        seen[np.asarray(grp.conj(A.array, x))] = True
    by_classes = 0
    orders = grp.element_orders
    for cls in conjugacy_classes(A):
        if p_part(int(orders[cls[0]]), p) == orders[cls[0]]:
            by_classes += 1
    return by_sylow, by_classes


def cc_p(G, p: int) -> int:
    a, b = cc_p_counts(G, p)
    if a != b:
        raise CriteriaDisagree(f"cc_p via Sylow ({a}) and via classes ({b}) disagree")
    return a


# -- fusion preservation --------------------------------------------------


def _transport(alpha: Morphism, P: Subgroup) -> Subgroup:
    return Subgroup(alpha.target.group, tuple(sorted(alpha(x) for x in P.members)))


def _conjugate_map(alpha: Morphism, inv: dict, f: Morphism, P2: Subgroup) -> tuple:
    """Images of alpha f alpha^-1 on the members of P2 = alpha(P)."""
    return tuple(alpha(f(inv[y])) for y in P2.members)


def preserves_fusion_naive(alpha: Morphism, FG: FusionSystem, FH: FusionSystem) -> bool:
    """Check alpha f alpha^-1 ∈ Hom_H and its converse for all P, Q ≤ S."""
    inv = {y: x for x, y in alpha.as_dict().items()}
    objects = FG.objects
    for P in objects:
        P2 = _transport(alpha, P)
        mine = FG.hom_to_sylow(P)
        theirs = FH.hom_to_sylow(P2)
        if len(mine) != len(theirs):
            return False
        moved = {_conjugate_map(alpha, inv, f, P2) for f in mine}
        target = {h.images for h in theirs}
        for Q in objects:
            Q2 = _transport(alpha, Q)
            left = {m for m in moved if Q2.mask[list(m)].all()}
            right = {m for m in target if Q2.mask[list(m)].all()}
            if left != right:
                return False
    return True


def preserves_fusion_fast(alpha: Morphism, FG: FusionSystem, FH: FusionSystem) -> bool:
    """Essentials correspond and automizers of essentials and S are conjugated."""
    inv = {y: x for x, y in alpha.as_dict().items()}
    moved = {_transport(alpha, P).members for P in FG.essentials}
    if moved != {P.members for P in FH.essentials}:
        return False
    for P in list(FG.essentials) + [FG.sylow]:
        P2 = _transport(alpha, P)
        mine = FG.automizer_maps(P)
        theirs = FH.automizer_maps(P2)
        if len(mine) != len(theirs):
            return False
        if {_conjugate_map(alpha, inv, f, P2) for f in mine} != {h.images for h in theirs}:
            return False
    return True


def _element_fusion_sizes(F: FusionSystem) -> dict:
    """x -> number of elements of S that are G-conjugate to x."""
    grp = F.group
    S = F.sylow
    sizes = {}
    for x in S.members:
        if x in sizes:
            continue
        orbit = np.unique(np.asarray(grp.conj(F.ambient.array, x)))
        inside = [int(y) for y in orbit if S.mask[y]]
        for y in inside:
            sizes[y] = len(inside)
    return sizes


def _essential_profile(F: FusionSystem) -> list:
    return sorted((members[0].order, len(members), fingerprint(F.aut(F.representative(members[0]))))
                  for members in F.essential_classes)


def p_locally_equivalent(G, H, p: int, oracle: bool = False,
                         inspect: Callable | None = None) -> EquivalenceVerdict:
    """Decide G ≃_p H.

    Cheap invariants are compared first; then isomorphisms S -> R are
    searched and checked (by the fast criterion, or the naive one when
    ``oracle`` is set).  ``inspect(alpha, FG, FH)`` is called for every
    candidate examined.
    """
    A, B = as_subgroup(G), as_subgroup(H)
    a, b = p_part(A.order, p), p_part(B.order, p)
    if a != b:
        return EquivalenceVerdict(False, refuted_by="p-part", detail=(a, b))
    FG, FH = fusion_system(A, p), fusion_system(B, p)
    S, R = FG.sylow, FH.sylow
    if find_isomorphism(S, R) is None:
        return EquivalenceVerdict(False, refuted_by="sylow-iso")
    a, b = cc_p(A, p), cc_p(B, p)
    if a != b:
        return EquivalenceVerdict(False, refuted_by="cc_p", detail=(a, b))
    autS, autR = FG.aut(S), FH.aut(R)
    if not are_isomorphic(autS, autR):
        return EquivalenceVerdict(False, refuted_by="automizer-S", detail=(autS.order, autR.order))
    if _essential_profile(FG) != _essential_profile(FH):
        return EquivalenceVerdict(False, refuted_by="essential-profile")
    alpha = search_fusion_isomorphism(FG, FH, oracle=oracle, inspect=inspect)
    if alpha is None:
        return EquivalenceVerdict(False, refuted_by="exhausted-search")
    return EquivalenceVerdict(True, witness=alpha)


def search_fusion_isomorphism(FG: FusionSystem, FH: FusionSystem, oracle: bool = False,
                              inspect: Callable | None = None) -> Morphism | None:
    """First fusion-preserving isomorphism S -> R in the deterministic order."""
    S, R = FG.sylow, FH.sylow
    check = preserves_fusion_naive if oracle else preserves_fusion_fast
    sizes_g, sizes_h = _element_fusion_sizes(FG), _element_fusion_sizes(FH)

    def allowed(x, y):
        return sizes_g[x] == sizes_h[y]

    def candidates():
        if S == R:
            yield Morphism(S, R, S.members, None)
        yield from iter_isomorphisms(S, R, allowed=allowed)

    for alpha in candidates():
        verdict = check(alpha, FG, FH)
        if inspect is not None:
            inspect(alpha, FG, FH)
        if verdict:
            if not oracle and not preserves_fusion_naive(alpha, FG, FH):
                raise CriteriaDisagree("fast fusion check accepted a map the naive check rejects")
            return alpha
    return None


# -- p-nilpotency and nilpotency ------------------------------------------


def p_nilpotency_criteria(G, p: int) -> dict:
    """The four characterisations of p-nilpotency, evaluated independently."""
    A = as_subgroup(G)
    grp = A.group
    S = sylow(A, p)
    orders = grp.element_orders
    # (1) p'-elements are closed under products
    prime_to_p = np.array([x for x in A.members if orders[x] % p], dtype=np.int64)
    mask = np.zeros(grp.order, dtype=bool)
    mask[prime_to_p] = True
    closed = True
    for chunk in np.array_split(prime_to_p, max(1, len(prime_to_p) // 256)):
        if not mask[np.asarray(grp.mul(chunk[:, None], prime_to_p[None, :]))].all():
            closed = False
            break
    # (2) a normal N with S -> G/N an isomorphism
    complement = False
    for N in normal_subgroups(A):
        if N.order * S.order != A.order:
            continue
        Q, proj = quotient(A, N)
        if len(set(int(v) for v in proj[S.array])) == Q.order:
            complement = True
            break
    # (3) p-locally equivalent to S
    T = S.as_group()
    local = p_locally_equivalent(A, T, p).equivalent
    # (4) every automizer of a p-subgroup is a p-group
    automizers = all(
        p_part(normalizer(A, P).order // centralizer(A, P).order, p)
        == normalizer(A, P).order // centralizer(A, P).order
        for P in all_subgroups(S)
    )
    return {"p_prime_closed": closed, "normal_complement": complement,
            "equivalent_to_sylow": local, "p_automizers": automizers}


def is_p_nilpotent(G, p: int) -> bool:
    crit = p_nilpotency_criteria(G, p)
    values = set(crit.values())
    if len(values) != 1:
        raise CriteriaDisagree(f"p-nilpotency criteria disagree: {crit}")
    return values.pop()


@dataclass
class NilpotencyReport:
    nilpotent: bool
    sylow_product_iso: bool
    all_p_nilpotent: bool

    def as_dict(self) -> dict:
        return {"nilpotent": self.nilpotent, "sylow_product_iso": self.sylow_product_iso,
                "all_p_nilpotent": self.all_p_nilpotent}


def sylow_product(G) -> Group:
    A = as_subgroup(G)
    return direct_product([sylow(A, p) for p in prime_factors(A.order)])


def nilpotency_report(G) -> NilpotencyReport:
    A = as_subgroup(G)
    report = NilpotencyReport(
        nilpotent=is_nilpotent(A),
        sylow_product_iso=are_isomorphic(A, sylow_product(A)),
        all_p_nilpotent=all(is_p_nilpotent(A, p) for p in prime_factors(A.order)),
    )
    if len(set(report.as_dict().values())) != 1:
        raise CriteriaDisagree(f"nilpotency characterisations disagree: {report.as_dict()}")
    return report


# -- degree one -----------------------------------------------------------


def h1_mod_p(G, p: int) -> int:
    """dim over F_p of G_ab ⊗ Z/p."""
    return torsion_profile(abelianization(G), p).rank


def _rref_mod_p(rows: list, width: int, p: int) -> list:
    """Row-reduced echelon form of the given vectors over F_p (nonzero rows)."""
    M = [[v % p for v in r] for r in rows]
    out = []
    col = 0
    while M and col < width:
        pivot = next((r for r in M if r[col]), None)
        if pivot is None:
            col += 1
            continue
        M.remove(pivot)
        inv = pow(pivot[col], p - 2, p)
        pivot = [(v * inv) % p for v in pivot]
        M = [[(a - r[col] * b) % p for a, b in zip(r, pivot)] for r in M]
        out = [[(a - r[col] * b) % p for a, b in zip(r, pivot)] for r in out]
        out.append(pivot)
        M = [r for r in M if any(r)]
        col += 1
    return sorted(out, key=lambda r: next(i for i, v in enumerate(r) if v))


def nullspace_mod_p(rows: list, width: int, p: int) -> list:
    """Basis of {f : r·f = 0 for every row r} over F_p."""
    R = _rref_mod_p(rows, width, p)
    pivots = [next(i for i, v in enumerate(r) if v) for r in R]
    basis = []
    for free in range(width):
        if free in pivots:
            continue
        f = [0] * width
        f[free] = 1
        for r, c in zip(R, pivots):
            f[c] = (-r[free]) % p
        basis.append(f)
    return basis


@dataclass
class FrattiniCoordinates:
    """Coordinates of S/Φ(S) ≅ F_p^r with respect to chosen elements of S."""

    p: int
    basis: list  # elements of S whose images form a basis
    coords: dict  # element of S -> tuple in F_p^r

    @property
    def rank(self) -> int:
        return len(self.basis)


def frattini_coordinates(S: Subgroup, p: int) -> FrattiniCoordinates:
    Phi = frattini_like(S, p)
    Q, proj = quotient(S, Phi)
    basis, span = [], Q.trivial
    for x in S.generators:
        q = int(proj[x])
        if q not in span:
            basis.append(x)
            span = span.join([q])
    images = [int(proj[b]) for b in basis]
    coord_of = {}
    r = len(basis)
    for flat in range(p ** r):
        c = [(flat // p ** i) % p for i in range(r)]
        q = 0
        for img, k in zip(images, c):
            q = int(Q.mul(q, Q.power(img, k)))
        coord_of[q] = tuple(c)
    coords = {x: coord_of[int(proj[x])] for x in S.members}
    return FrattiniCoordinates(p, basis, coords)


def stable_h1(F: FusionSystem, all_morphisms: bool = False) -> tuple[int, list]:
    """Stable elements of Hom(S, Z/p): dimension and a basis.

    A functional is recorded as its values on the Frattini basis of S.  By
    default only automizers of S and of essential subgroups are imposed;
    ``all_morphisms`` imposes every morphism P -> S instead.
    """
    p = F.p
    fc = frattini_coordinates(F.sylow, p)
    rows = []

    def impose(maps):
        for f in maps:
            for x in f.source.generators:
                a, b = fc.coords[f(x)], fc.coords[x]
                rows.append([(u - v) % p for u, v in zip(a, b)])

    if all_morphisms:
        for P in F.objects:
            impose(F.hom_to_sylow(P))
    else:
        for P in [F.sylow] + list(F.essentials):
            impose(F.automizer_maps(P))
    basis = nullspace_mod_p([r for r in rows if any(r)], fc.rank, p)
    return len(basis), basis
