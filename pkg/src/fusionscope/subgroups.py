"""Subgroup-level algorithms: centralizers, classes, Sylow, lattice, quotients.

Functions that take "G" accept either a :class:`Group` or a :class:`Subgroup`
(the latter restricts the ambient elements, e.g. ``centralizer(S, P)`` is the
S-centralizer of P).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .config import limits
from .errors import CapExceeded, NotNormal
from .group import Group, Subgroup, check_same, group_from_generators


def as_subgroup(X) -> Subgroup:
    return X.whole if isinstance(X, Group) else X


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == [n]


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def _conj_matrix(A: Subgroup, B: Subgroup) -> np.ndarray:
    """``a b a^-1`` for a in A (rows) and b among the generators of B (cols)."""
    G = A.group
    gens = np.array(B.generators, dtype=np.int64)
    if len(gens) == 0:
        return np.zeros((A.order, 0), dtype=np.int64)
    return np.asarray(G.conj(A.array[:, None], gens[None, :]))


def transporter(G, H: Subgroup, K: Subgroup) -> np.ndarray:
    """Sorted elements g of G with ``g H g^-1 ⊆ K``."""
    A = as_subgroup(G)
    check_same(A, H, K)
    conj = _conj_matrix(A, H)
    ok = K.mask[conj].all(axis=1)
    return A.array[ok]


def normalizer(G, H: Subgroup) -> Subgroup:
    A = as_subgroup(G)
    return Subgroup(A.group, tuple(int(x) for x in transporter(A, H, H)))


def centralizer(G, H: Subgroup) -> Subgroup:
    A = as_subgroup(G)
    check_same(A, H)
    gens = np.array(H.generators, dtype=np.int64)
    conj = _conj_matrix(A, H)
    ok = (conj == gens[None, :]).all(axis=1)
    return Subgroup(A.group, tuple(int(x) for x in A.array[ok]))


def center(G) -> Subgroup:
    A = as_subgroup(G)
    return centralizer(A, A)


def conjugacy_classes(G) -> list[np.ndarray]:
    """Classes of elements of G under G-conjugation, ordered by least member."""
    A = as_subgroup(G)
    cache = A.group._cache
    key = ("classes", A.members)
    if key not in cache:
        classes = []
        assigned = np.zeros(A.group.order, dtype=bool)
        for x in A.members:
            if assigned[x]:
                continue
            orbit = np.unique(A.group.conj(A.array, x))
            assigned[orbit] = True
            classes.append(orbit)
        cache[key] = classes
    return cache[key]


def normal_closure(G, elements: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup of G containing ``elements``."""
    A = as_subgroup(G)
    grp = A.group
    K = grp.generate(elements)
    ambient_gens = np.array(A.generators, dtype=np.int64)
    while True:
        if len(K.generators) == 0 or len(ambient_gens) == 0:
            return K
        conj = np.asarray(grp.conj(ambient_gens[:, None], np.array(K.generators)[None, :])).ravel()
        outside = conj[~K.mask[conj]]
        if len(outside) == 0:
            return K
        K = K.join(np.unique(outside))


def commutator(grp: Group, a: int, b: int) -> int:
    """``a b a^-1 b^-1``."""
    return int(grp.mul(grp.mul(a, b), grp.mul(grp.inverse[a], grp.inverse[b])))


def commutator_of(G, H: Subgroup, K: Subgroup) -> Subgroup:
    """``[H, K]`` for H, K normal in G."""
    A = as_subgroup(G)
    grp = A.group
    comms = {commutator(grp, h, k) for h in H.generators for k in K.generators}
    return normal_closure(A, comms)


def commutator_subgroup(G) -> Subgroup:
    A = as_subgroup(G)
    return commutator_of(A, A, A)


def lower_central_series(G) -> list[Subgroup]:
    """``[γ1, γ2, ...]`` up to and including the first repeated term."""
    A = as_subgroup(G)
    series = [A]
    while True:
        nxt = commutator_of(A, series[-1], A)
        series.append(nxt)
        if nxt == series[-2]:
            return series


def is_nilpotent(G) -> bool:
    return lower_central_series(G)[-1].order == 1


def _is_p_element_mod(grp: Group, x: int, P: Subgroup, p: int, bound: int) -> bool:
    y, k = x, 1
    while k <= bound:
        y = grp.power(y, p)
        if y in P:
            return True
        k *= p
    return False


def sylow(G, p: int) -> Subgroup:
    """A Sylow p-subgroup, grown from a cyclic p-subgroup inside normalizers."""
    A = as_subgroup(G)
    grp = A.group
    cache = grp._cache
    key = ("sylow", A.members, p)
    if key in cache:
        return cache[key]
    target = p_part(A.order, p)
    P = grp.trivial
    while P.order < target:
        N = normalizer(A, P)
        for x in N.members:
            if x in P:
                continue
            # x P has p-power order in N/P, so <P, x> is a p-group
            if _is_p_element_mod(grp, x, P, p, target):
                P = P.join([x])
                break
        else:  # pragma: no cover - Sylow's theorem guarantees progress
            raise RuntimeError("Sylow ascent stalled")
    cache[key] = P
    return P


def _sort_key(H: Subgroup):
    return (H.order, H.members)


def all_subgroups(H, containing: Subgroup | None = None, cap: int | None = None) -> list[Subgroup]:
    """Every subgroup of H (optionally only those containing ``containing``).

    Layered closure: start from cyclic subgroups (or from ``containing``) and
    keep adjoining one coset representative at a time until nothing new
    appears.  Sorted by (order, members).
    """
    A = as_subgroup(H)
    cap = limits.subgroups if cap is None else cap
    if A.order > cap:
        raise CapExceeded(f"subgroup enumeration limited to order {cap}, got {A.order}")
    grp = A.group
    cache = grp._cache
    key = ("subgroups", A.members, containing.members if containing is not None else None)
    if key in cache:
        return cache[key]
    found: dict[tuple, Subgroup] = {}
    if containing is None:
        layer = []
        for x in A.members:
            C = grp.generate([x])
            if C.members not in found:
                found[C.members] = C
                layer.append(C)
    else:
        check_same(A, containing)
        found[containing.members] = containing
        layer = [containing]
    while layer:
        nxt = []
        for K in layer:
            if K.order == A.order:
                continue
            for x in _right_coset_reps(A, K):
                J = K.join([x])
                if J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        layer = nxt
    result = sorted(found.values(), key=_sort_key)
    cache[key] = result
    return result


def _right_coset_reps(A: Subgroup, K: Subgroup) -> list[int]:
    """One element from each right coset ``K x`` other than K itself."""
    grp = A.group
    covered = K.mask.copy()
    reps = []
    for x in A.members:
        if covered[x]:
            continue
        reps.append(x)
        covered[np.asarray(grp.mul(K.array, x))] = True
    return reps


def normal_subgroups(G) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of classes."""
    A = as_subgroup(G)
    found: dict[tuple, Subgroup] = {}
    basic = []
    for cls in conjugacy_classes(A):
        N = normal_closure(A, [int(cls[0])])
        if N.members not in found:
            found[N.members] = N
            basic.append(N)
    layer = list(basic)
    while layer:
        nxt = []
        for N in layer:
            for M in basic:
                if M.issubset(N):
                    continue
                J = N.join(M.generators)
                if J.members not in found:
                    found[J.members] = J
                    nxt.append(J)
        layer = nxt
    return sorted(found.values(), key=_sort_key)


def quotient(G, N: Subgroup, name: str | None = None) -> tuple[Group, np.ndarray]:
    """``G/N`` acting on the left cosets of N, plus the projection.

    The projection is an array indexed by ambient element index (entries
    outside G are -1) giving the image in the quotient group.
    """
    A = as_subgroup(G)
    grp = check_same(A, N)
    if not N.issubset(A) or not N.is_normal_in(A):
        raise NotNormal("quotient requires a normal subgroup")
    coset = np.full(grp.order, -1, dtype=np.int64)
    reps = []
    for x in A.members:
        if coset[x] >= 0:
            continue
        coset[np.asarray(grp.mul(x, N.array))] = len(reps)
        reps.append(x)
    reps = np.array(reps, dtype=np.int64)
    # row for g: the permutation gxN -> coset id, over coset reps x
    action = coset[np.asarray(grp.mul(A.array[:, None], reps[None, :]))]
    gens = [tuple(int(v) for v in action[A.members.index(g)]) for g in A.generators]
    Q = group_from_generators(len(reps), gens, name=name)
    projection = np.full(grp.order, -1, dtype=np.int64)
    projection[A.array] = Q.locate(action)
    return Q, projection


def abelianization(G) -> Group:
    A = as_subgroup(G)
    return quotient(A, commutator_subgroup(A))[0]


def frattini_like(S: Subgroup, p: int) -> Subgroup:
    """``S^p [S, S]``; for a p-group this is the Frattini subgroup."""
    grp = S.group
    extra = [grp.power(x, p) for x in S.generators]
    extra += [commutator(grp, a, b) for a in S.generators for b in S.generators]
    return normal_closure(S, extra)
