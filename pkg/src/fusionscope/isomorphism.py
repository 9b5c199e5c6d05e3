"""Isomorphism search between small groups, fingerprints and type labels.

The search assigns images to a generating sequence of the source one at a
time, extends the partial map to the generated subgroup and backtracks as
soon as it stops being a well-defined injective homomorphism.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from .abelian import invariant_factors
from .group import Group, Morphism, Subgroup
from .subgroups import abelianization, as_subgroup, conjugacy_classes, is_nilpotent


def class_sizes(A: Subgroup) -> dict:
    """Element -> size of its A-conjugacy class."""
    sizes = {}
    for cls in conjugacy_classes(A):
        for x in cls:
            sizes[int(x)] = len(cls)
    return sizes


def _extend(A: Subgroup, B: Subgroup, mapping: dict, gens: list, images: list) -> dict | None:
    """Extend ``mapping`` (a hom on <gens[:-1]>) by ``gens[-1] -> images[-1]``."""
    ga, gb = A.group, B.group
    s, t = gens[-1], images[-1]
    m = dict(mapping)
    used = set(m.values())
    queue = [(x, True) for x in mapping]
    while queue:
        x, old = queue.pop()
        pairs = [(s, t)] if old else zip(gens, images)
        for g, h in pairs:
            y = int(ga.mul(x, g))
            v = int(gb.mul(m[x], h))
            if y in m:
                if m[y] != v:
                    return None
            else:
                if v in used:
                    return None
                m[y] = v
                used.add(v)
                queue.append((y, False))
    return m


def iter_isomorphisms(A, B, allowed: Callable[[int, int], bool] | None = None,
                      use_class_sizes: bool = True) -> Iterator[Morphism]:
    """All isomorphisms ``A -> B`` in a deterministic order.

    ``allowed(x, y)`` can veto sending the generator x to y.
    """
    A, B = as_subgroup(A), as_subgroup(B)
    if A.order != B.order:
        return
    ga, gb = A.group, B.group
    gens = list(A.generators)
    if not gens:
        yield Morphism(A, B, B.members, None)
        return
    oa, ob = ga.element_orders, gb.element_orders
    ca = class_sizes(A) if use_class_sizes else None
    cb = class_sizes(B) if use_class_sizes else None
    candidates = []
    for g in gens:
        cands = [y for y in B.members if ob[y] == oa[g]
                 and (ca is None or ca[g] == cb[y])
                 and (allowed is None or allowed(g, y))]
        candidates.append(cands)

    def backtrack(k, mapping, chosen):
        if k == len(gens):
            if len(mapping) == A.order:
                yield Morphism(A, B, tuple(mapping[x] for x in A.members), None)
            return
        for y in candidates[k]:
            m = _extend(A, B, mapping, gens[:k + 1], chosen + [y])
            if m is not None:
                yield from backtrack(k + 1, m, chosen + [y])

    yield from backtrack(0, {0: 0}, [])


def order_histogram(A) -> tuple:
    A = as_subgroup(A)
    return tuple(sorted(Counter(int(o) for o in A.group.element_orders[A.array]).items()))


def _class_profile(A: Subgroup) -> tuple:
    return tuple(sorted(Counter((len(c), int(A.group.element_orders[c[0]])) for c in conjugacy_classes(A)).items()))


def are_isomorphic(A, B) -> bool:
    return find_isomorphism(A, B) is not None


def find_isomorphism(A, B) -> Morphism | None:
    A, B = as_subgroup(A), as_subgroup(B)
    if A.order != B.order or order_histogram(A) != order_histogram(B):
        return None
    if _class_profile(A) != _class_profile(B):
        return None
    return next(iter_isomorphisms(A, B), None)


def fingerprint(G) -> tuple:
    """(order, abelianization invariants, element-order histogram, nilpotent)."""
    A = as_subgroup(G)
    key = ("fingerprint", A.members)
    cache = A.group._cache
    if key not in cache:
        ab = invariant_factors(abelianization(A))
        cache[key] = (A.order, tuple(ab), order_histogram(A), is_nilpotent(A))
    return cache[key]


# Nonabelian groups that get a printable name.  Abelian groups are named
# from their invariant factors instead.
NAMED_GROUPS = {
    "S3": "S(3)",
    "D8": "D(8)",
    "Q8": "Dic(8)",
    "D10": "D(10)",
    "A4": "A(4)",
    "D12": "D(12)",
    "Dic12": "Dic(12)",
    "D14": "D(14)",
    "D16": "D(16)",
    "Q16": "Dic(16)",
    "D18": "D(18)",
    "D20": "D(20)",
    "Dic20": "Dic(20)",
    "AGL(1,5)": "AGL(1,5)",
    "AGL(1,7)": "AGL(1,7)",
    "S4": "S(4)",
    "A5": "A(5)",
}


@lru_cache(maxsize=None)
def _named_group(expr: str) -> Group:
    from .catalog import build_text

    return build_text(expr)


def type_label(G) -> str:
    """Short isomorphism-type name such as ``Z/2xZ/2`` or ``S3``.

    Falls back to ``order-n`` when the group is not recognised.
    """
    A = as_subgroup(G)
    if A.order == 1:
        return "1"
    fp = fingerprint(A)
    if fp[3] and A.order == int(np.prod(fp[1])) and _is_abelian(A):
        return "x".join(f"Z/{d}" for d in fp[1])
    for name, expr in NAMED_GROUPS.items():
        H = _named_group(expr)
        if H.order == A.order and fingerprint(H) == fp and are_isomorphic(A, H):
            return name
    return f"order-{A.order}"


def _is_abelian(A: Subgroup) -> bool:
    grp = A.group
    gens = A.generators
    return all(int(grp.mul(a, b)) == int(grp.mul(b, a)) for a in gens for b in gens)
