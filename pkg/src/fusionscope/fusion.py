"""The fusion system of a finite group at a prime.

Objects are the subgroups of a fixed Sylow p-subgroup S; morphisms P -> Q are
the maps x -> g x g^-1 with g P g^-1 inside Q.  Besides the hom-sets this
module computes the G-conjugacy classes of objects, automizers, and the
centric / fully normalized / essential predicates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .group import Group, Morphism, Subgroup, group_from_generators
from .isomorphism import fingerprint, type_label
from .subgroups import (
    all_subgroups,
    as_subgroup,
    center,
    centralizer,
    normalizer,
    quotient,
    sylow,
    transporter,
)


def hom_G(G, P: Subgroup, Q: Subgroup) -> list[Morphism]:
    """All G-subconjugations P -> Q, one per distinct map, least witness first."""
    A = as_subgroup(G)
    grp = A.group
    seen = {}
    for g in transporter(A, P, Q):
        images = tuple(int(x) for x in grp.conj(int(g), P.array))
        if images not in seen:
            seen[images] = Morphism(P, Q, images, witness=int(g))
    return list(seen.values())


def automizer(G, P: Subgroup) -> Group:
    """Aut_G(P) as a permutation group on the positions of P's elements."""
    return _automizer_from_maps(P, hom_G(G, P, P))


def _automizer_from_maps(P: Subgroup, maps: list[Morphism]) -> Group:
    pos = P.position
    perms = [tuple(pos[y] for y in f.images) for f in maps]
    return group_from_generators(P.order, perms)


def map_to_perm(f: Morphism) -> tuple:
    pos = f.target.position
    return tuple(pos[y] for y in f.images)


def outer_automizer(G, P: Subgroup) -> Group:
    """Out_G(P) = Aut_G(P) / Inn(P)."""
    A = automizer(G, P)
    return _outer(P, A)


def _outer(P: Subgroup, A: Group) -> Group:
    grp = P.group
    pos = P.position
    inner = set()
    for x in P.generators:
        images = grp.conj(x, P.array)
        inner.add(A.index(tuple(pos[int(y)] for y in images)))
    Inn = A.generate(inner)
    return quotient(A, Inn)[0]


def strongly_p_embedded(H, p: int) -> Subgroup | None:
    """A strongly p-embedded subgroup of H, or None.

    K qualifies when it is proper, p divides |K|, K contains a Sylow
    p-subgroup of H, and K ∩ hKh^-1 has order prime to p for every h ∉ K.
    """
    A = as_subgroup(H)
    if A.order % p:
        return None
    T = sylow(A, p)
    if T.is_normal_in(A):
        # every K ⊇ T meets each conjugate in T
        return None
    for K in all_subgroups(A, containing=T):
        if K.order == A.order:
            continue
        if _embedding_holds(A, K, p):
            return K
    return None


def _embedding_holds(A: Subgroup, K: Subgroup, p: int) -> bool:
    grp = A.group
    covered = K.mask.copy()
    for h in A.members:
        if covered[h]:
            continue
        covered[np.asarray(grp.mul(h, K.array))] = True
        conj = K.conjugate(h)
        if K.intersection(conj).order % p == 0:
            return False
    return True


def has_strongly_p_embedded(H, p: int) -> bool:
    return strongly_p_embedded(H, p) is not None


@dataclass
class FusionClass:
    index: int
    members: tuple  # Subgroups, sorted
    representative: Subgroup
    centric: bool
    essential: bool

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def size(self) -> int:
        return len(self.members)


class FusionSystem:
    """F_S(G) for a Sylow p-subgroup S chosen by :func:`sylow`."""

    def __init__(self, G, p: int, S: Subgroup | None = None):
        self.ambient = as_subgroup(G)
        self.group = self.ambient.group
        self.p = p
        self.sylow = S if S is not None else sylow(self.ambient, p)
        self._class_data: dict = {}

    def __repr__(self):
        return f"<FusionSystem p={self.p} |S|={self.sylow.order} of {self.group!r}>"

    # -- objects and morphisms -------------------------------------------

    @cached_property
    def objects(self) -> list[Subgroup]:
        return all_subgroups(self.sylow)

    def hom(self, P: Subgroup, Q: Subgroup) -> list[Morphism]:
        return hom_G(self.ambient, P, Q)

    def hom_to_sylow(self, P: Subgroup) -> list[Morphism]:
        key = ("hom_S", P.members)
        if key not in self._class_data:
            self._class_data[key] = hom_G(self.ambient, P, self.sylow)
        return self._class_data[key]

    def is_morphism(self, f: Morphism) -> bool:
        """Whether f (with target inside S) is a G-subconjugation."""
        if not f.source.issubset(self.sylow):
            return False
        return any(h.images == f.images for h in self.hom_to_sylow(f.source))

    def automizer_maps(self, P: Subgroup) -> list[Morphism]:
        key = ("aut_maps", P.members)
        if key not in self._class_data:
            self._class_data[key] = hom_G(self.ambient, P, P)
        return self._class_data[key]

    def aut(self, P: Subgroup) -> Group:
        key = ("aut", P.members)
        if key not in self._class_data:
            self._class_data[key] = _automizer_from_maps(P, self.automizer_maps(P))
        return self._class_data[key]

    def out(self, P: Subgroup) -> Group:
        key = ("out", P.members)
        if key not in self._class_data:
            self._class_data[key] = _outer(P, self.aut(P))
        return self._class_data[key]

    def automizer_order(self, P: Subgroup) -> int:
        return normalizer(self.ambient, P).order // centralizer(self.ambient, P).order

    # -- conjugacy of objects --------------------------------------------

    def conjugates_in_sylow(self, P: Subgroup) -> list[Subgroup]:
        """G-conjugates of P lying in S, sorted by members."""
        key = ("conj", P.members)
        if key in self._class_data:
            return self._class_data[key]
        grp = self.group
        G = self.ambient.array
        found = set()
        step = max(1, 200_000 // max(P.order, 1))
        for start in range(0, len(G), step):
            g = G[start:start + step]
            rows = np.asarray(grp.conj(g[:, None], P.array[None, :]))
            rows = rows[self.sylow.mask[rows].all(axis=1)]
            rows.sort(axis=1)
            found.update(tuple(int(x) for x in r) for r in np.unique(rows, axis=0))
        result = [Subgroup(grp, m) for m in sorted(found)]
        for Q in result:
            self._class_data[("conj", Q.members)] = result
        return result

    def is_centric(self, P: Subgroup) -> bool:
        return self._class_info(P)["centric"]

    def is_fully_normalized(self, P: Subgroup) -> bool:
        info = self._class_info(P)
        return normalizer(self.sylow, P).order == info["max_normalizer"]

    def is_essential(self, P: Subgroup) -> bool:
        return self._class_info(P)["essential"]

    def representative(self, P: Subgroup) -> Subgroup:
        return self._class_info(P)["representative"]

    def _class_info(self, P: Subgroup) -> dict:
        conjugates = self.conjugates_in_sylow(P)
        key = ("info", conjugates[0].members)
        if key in self._class_data:
            return self._class_data[key]
        S = self.sylow
        centric = all(centralizer(S, Q) == center(Q) for Q in conjugates)
        norm_orders = [normalizer(S, Q).order for Q in conjugates]
        top = max(norm_orders)
        rep = next(Q for Q, n in zip(conjugates, norm_orders) if n == top)
        essential = centric and has_strongly_p_embedded(self.out(rep), self.p)
        info = {
            "centric": centric,
            "max_normalizer": top,
            "representative": rep,
            "essential": essential,
        }
        self._class_data[key] = info
        return info

    @cached_property
    def classes(self) -> list[FusionClass]:
        """G-conjugacy classes of all objects, by (order, representative)."""
        done = set()
        raw = []
        for P in self.objects:
            if P.members in done:
                continue
            members = self.conjugates_in_sylow(P)
            done.update(Q.members for Q in members)
            raw.append(members)
        out = []
        for members in raw:
            info = self._class_info(members[0])
            out.append((info["representative"], members, info))
        out.sort(key=lambda t: (t[0].order, t[0].members))
        return [FusionClass(i, tuple(m), rep, info["centric"], info["essential"])
                for i, (rep, m, info) in enumerate(out)]

    def class_index(self, P: Subgroup) -> int:
        lookup = self._class_lookup
        return lookup[P.members]

    @cached_property
    def _class_lookup(self) -> dict:
        return {Q.members: c.index for c in self.classes for Q in c.members}

    @cached_property
    def essentials(self) -> list[Subgroup]:
        """All essential subgroups (centric ones must contain Z(S))."""
        candidates = all_subgroups(self.sylow, containing=center(self.sylow))
        return sorted((P for P in candidates if self.is_essential(P)), key=lambda P: (P.order, P.members))

    @cached_property
    def essential_classes(self) -> list[list[Subgroup]]:
        seen, out = set(), []
        for P in self.essentials:
            if P.members in seen:
                continue
            members = self.conjugates_in_sylow(P)
            seen.update(Q.members for Q in members)
            out.append(members)
        return out

    def automizer_label(self, P: Subgroup) -> str:
        return type_label(self.aut(P))

    def automizer_fingerprint(self, P: Subgroup) -> tuple:
        return fingerprint(self.aut(P))


def fusion_system(G, p: int) -> FusionSystem:
    """Cached constructor: one fusion system per (group, prime)."""
    A = as_subgroup(G)
    cache = A.group._cache
    key = ("fusion", A.members, p)
    if key not in cache:
        cache[key] = FusionSystem(A, p)
    return cache[key]


# -- diagrams --------------------------------------------------------------


@dataclass
class FusionDiagram:
    p: int
    nodes: list  # Subgroups, sorted by (order, members)
    levels: dict  # exponent n -> node ids of order p^n
    inclusions: list  # (smaller id, larger id) covering pairs
    conjugations: list  # (id, id) spanning paths inside each class
    classes: list  # FusionClass restricted to the nodes
    node_class: list  # node id -> class position in ``classes``
    labels: dict = field(default_factory=dict)  # class position -> automizer label


def _log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


def _build_diagram(F: FusionSystem, nodes: list[Subgroup], classes: list[FusionClass], consecutive: bool) -> FusionDiagram:
    nodes = sorted(nodes, key=lambda P: (P.order, P.members))
    ids = {P.members: i for i, P in enumerate(nodes)}
    levels: dict[int, list[int]] = {}
    for i, P in enumerate(nodes):
        levels.setdefault(_log(P.order, F.p), []).append(i)
    masks = [P.mask for P in nodes]
    inclusions = []
    for j, Q in enumerate(nodes):
        for i, P in enumerate(nodes[:j]):
            if P.order == Q.order or not masks[j][P.array].all():
                continue
            if consecutive:
                if Q.order != P.order * F.p:
                    continue
            elif any(nodes[k].order > P.order and nodes[k].order < Q.order
                     and masks[k][P.array].all() and masks[j][nodes[k].array].all()
                     for k in range(len(nodes))):
                continue
            inclusions.append((i, j))
    node_class = [0] * len(nodes)
    conjugations = []
    for pos, c in enumerate(classes):
        member_ids = sorted(ids[Q.members] for Q in c.members if Q.members in ids)
        for i in member_ids:
            node_class[i] = pos
        conjugations.extend(zip(member_ids, member_ids[1:]))
    labels = {pos: F.automizer_label(c.representative) for pos, c in enumerate(classes)}
    return FusionDiagram(F.p, nodes, levels, inclusions, conjugations, list(classes), node_class, labels)


def diagram(F: FusionSystem) -> FusionDiagram:
    return _build_diagram(F, list(F.objects), F.classes, consecutive=True)


def essential_subsystem(F: FusionSystem) -> FusionDiagram:
    """The diagram restricted to the essential subgroups and S."""
    S = F.sylow
    nodes = list(F.essentials) + [S]
    classes = []
    for members in F.essential_classes + [[S]]:
        info = F._class_info(members[0])
        classes.append(FusionClass(len(classes), tuple(members), info["representative"],
                                   info["centric"], info["essential"]))
    return _build_diagram(F, nodes, classes, consecutive=False)
