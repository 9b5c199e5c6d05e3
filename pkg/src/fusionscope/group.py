"""Finite permutation groups with an enumerated element table.

Elements are stored once, sorted lexicographically by their image tuples, and
every algorithm downstream works with the resulting integer indices.  The
identity is always index 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import perm as _perm
from .config import TABLE_LIMIT, limits
from .errors import BadPermutation, CapExceeded, ForeignSubgroup


def _row_keys(rows: np.ndarray) -> np.ndarray:
    """Sort keys that order permutation rows lexicographically."""
    degree = rows.shape[1]
    if degree <= 15:
        # mixed radix: degree**degree fits in int64 up to degree 15
        weights = degree ** np.arange(degree - 1, -1, -1, dtype=np.int64)
        return rows.astype(np.int64) @ weights
    # big-endian bytes compare in the same order as the integer tuples
    rows = np.ascontiguousarray(rows, dtype=">u2")
    return rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()


class Group:
    """A permutation group on ``degree`` points, fully enumerated.

    Build instances with :func:`group_from_generators`.
    """

    def __init__(self, degree: int, generators: Sequence[tuple], elements: np.ndarray, name: str | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.perms = elements
        self.order = len(elements)
        self.identity = 0
        self.name = name
        self._keys = _row_keys(elements)
        self._table = None
        if self.order <= TABLE_LIMIT:
            self._table = self._build_table()
        self.inverse = self._build_inverse()
        self._cache: dict = {}

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Group{label} order={self.order} degree={self.degree}>"

    def __len__(self):
        return self.order

    # -- element lookup -------------------------------------------------

    def locate(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given permutation rows (shape ``(m, degree)``)."""
        rows = np.asarray(rows).reshape(-1, self.degree)
        keys = _row_keys(rows)
        pos = np.searchsorted(self._keys, keys)
        pos = np.minimum(pos, self.order - 1)
        if not np.all(self._keys[pos] == keys):
            raise BadPermutation("permutation is not an element of the group")
        return pos

    def index(self, p: Sequence[int]) -> int:
        p = _perm.check(p, self.degree)
        return int(self.locate(np.array([p]))[0])

    def element(self, i: int) -> tuple:
        return tuple(int(x) for x in self.perms[i])

    def format(self, i: int) -> str:
        return _perm.format_cycles(self.perms[i])

    # -- arithmetic -----------------------------------------------------

    def _build_table(self) -> np.ndarray:
        n, d = self.order, self.degree
        table = np.empty((n, n), dtype=np.int32)
        E = self.perms
        step = max(1, (1 << 20) // max(n * d, 1))
        for a in range(0, n, step):
            # rows a: a∘b for every b, i.e. E[a][E[b]]
            block = E[a:a + step]
            comp = np.take_along_axis(block[:, None, :], E[None, :, :], axis=2)
            table[a:a + step] = self.locate(comp.reshape(-1, d)).reshape(-1, n)
        return table

    def _build_inverse(self) -> np.ndarray:
        if self._table is not None:
            return np.argmax(self._table == 0, axis=1).astype(np.int32)
        inv_rows = np.empty_like(self.perms)
        rows = np.arange(self.order)[:, None]
        inv_rows[rows, self.perms] = np.arange(self.degree)[None, :]
        return self.locate(inv_rows).astype(np.int32)

    def mul(self, a, b):
        """Product ``a*b`` (apply ``b`` first); broadcasts over index arrays."""
        if self._table is not None:
            return self._table[a, b]
        a_arr, b_arr = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        shape = a_arr.shape
        rows = np.take_along_axis(self.perms[a_arr.ravel()], self.perms[b_arr.ravel()], axis=1)
        out = self.locate(rows).astype(np.int32).reshape(shape)
        return out if shape else int(out)

    def conj(self, g, x):
        """``g x g^-1``; broadcasts."""
        return self.mul(self.mul(g, x), self.inverse[g])

    def power(self, x: int, k: int) -> int:
        result, base = 0, int(x)
        while k:
            if k & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            k >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        current = np.arange(self.order)
        pending = current != 0
        k = 1
        while pending.any():
            k += 1
            current = self.mul(current, np.arange(self.order))
            done = pending & (current == 0)
            orders[done] = k
            pending &= ~done
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        gens = [self.index(g) for g in self.generators]
        return all(int(self.mul(a, b)) == int(self.mul(b, a)) for a in gens for b in gens)

    # -- subgroups --------------------------------------------------------

    def closure(self, gens: Iterable[int], start: Iterable[int] = (0,)) -> np.ndarray:
        """Sorted indices of the subgroup generated by ``gens``.

        ``start`` seeds the search and must lie inside that subgroup (passing
        a known subgroup's members saves work).
        """
        gens = np.unique(np.fromiter((int(g) for g in gens), dtype=np.int64, count=-1))
        mask = np.zeros(self.order, dtype=bool)
        frontier = np.unique(np.fromiter((int(s) for s in start), dtype=np.int64, count=-1))
        frontier = np.union1d(frontier, [0]).astype(np.int64)
        mask[frontier] = True
        if len(gens) == 0:
            return np.flatnonzero(mask)
        while len(frontier):
            prod = np.asarray(self.mul(frontier[:, None], gens[None, :])).ravel()
            new = np.unique(prod[~mask[prod]])
            mask[new] = True
            frontier = new
        return np.flatnonzero(mask)

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(sorted(int(m) for m in members)))

    def generate(self, gens: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(int(m) for m in self.closure(gens)))

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``group`` given by its sorted element indices."""

    group: Group
    members: tuple

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.group is self.group and other.members == self.members

    def __hash__(self):
        return hash((id(self.group), self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return bool(self.mask[int(x)])

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        gens = ", ".join(self.group.format(g) for g in self.generators)
        return f"<Subgroup order={self.order} of {self.group!r} gens=[{gens}]>"

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.order, dtype=bool)
        m[self.array] = True
        return m

    @cached_property
    def position(self) -> dict:
        return {x: i for i, x in enumerate(self.members)}

    @cached_property
    def generators(self) -> tuple:
        """Deterministic generating set, preferring elements of large order."""
        G = self.group
        orders = G.element_orders[self.array]
        ranked = sorted(zip(-orders, self.members))
        gens: list[int] = []
        current = np.zeros(G.order, dtype=bool)
        current[0] = True
        size = 1
        for _, x in ranked:
            if size == self.order:
                break
            if not current[x]:
                gens.append(int(x))
                closed = G.closure(gens)
                current[:] = False
                current[closed] = True
                size = len(closed)
        return tuple(gens)

    def issubset(self, other: "Subgroup") -> bool:
        check_same(self, other)
        return bool(other.mask[self.array].all())

    def conjugate(self, g: int) -> "Subgroup":
        """``g H g^-1``."""
        return Subgroup(self.group, tuple(sorted(int(x) for x in self.group.conj(g, self.array))))

    def intersection(self, other: "Subgroup") -> "Subgroup":
        check_same(self, other)
        return Subgroup(self.group, tuple(int(x) for x in np.intersect1d(self.array, other.array)))

    def join(self, extra: Iterable[int]) -> "Subgroup":
        G = self.group
        gens = list(self.generators) + [int(x) for x in extra]
        return Subgroup(G, tuple(int(m) for m in G.closure(gens, start=self.members)))

    def is_normal_in(self, other: "Subgroup") -> bool:
        check_same(self, other)
        if not self.generators or not other.generators:
            return True
        G = self.group
        conj = G.conj(np.array(other.generators)[:, None], np.array(self.generators)[None, :])
        return bool(self.mask[np.asarray(conj).ravel()].all())

    def as_group(self, name: str | None = None) -> Group:
        """This subgroup as a standalone group on the same points."""
        return group_from_generators(self.group.degree, [self.group.element(g) for g in self.generators], name=name)


def check_same(*subgroups: Subgroup) -> Group:
    G = subgroups[0].group
    for H in subgroups[1:]:
        if H.group is not G:
            raise ForeignSubgroup("subgroups belong to different ambient groups")
    return G


def group_from_generators(degree: int, gens: Iterable[Sequence[int]], *, cap: int | None = None, name: str | None = None) -> Group:
    """Enumerate the permutation group generated by ``gens``.

    Raises :class:`CapExceeded` if the closure grows beyond ``cap`` elements
    (default: ``limits.order``).
    """
    if degree < 1:
        raise BadPermutation("degree must be positive")
    cap = limits.order if cap is None else cap
    gens = [_perm.check(g, degree) for g in gens]
    ident = _perm.identity(degree)
    gens = sorted({g for g in gens if g != ident})
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(x[i] for i in g)  # x∘g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    elements = np.array(sorted(seen), dtype=np.int32).reshape(len(seen), degree)
    return Group(degree, gens, elements, name=name)


def direct_product(factors: Sequence, name: str | None = None) -> Group:
    """Direct product of groups or subgroups, each factor on its own points."""
    degree, gens = 0, []
    for F in factors:
        grp = F if isinstance(F, Group) else F.group
        elems = F.generators if isinstance(F, Group) else [grp.element(g) for g in F.generators]
        for g in elems:
            gens.append(list(range(degree)) + [degree + x for x in g])
        degree += grp.degree
    gens = [tuple(g) + tuple(range(len(g), degree)) for g in gens]
    return group_from_generators(max(degree, 1), gens, name=name)


@dataclass(frozen=True, eq=False)
class Morphism:
    """An injective homomorphism ``source -> target`` stored elementwise.

    ``images[i]`` is the image of ``source.members[i]``.  ``witness`` is an
    ambient element g with the map equal to x -> g x g^-1, when known.
    """

    source: Subgroup
    target: Subgroup
    images: tuple
    witness: int | None = None

    def __call__(self, x: int) -> int:
        return self.images[self.source.position[int(x)]]

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source == other.source
                and self.target.group is other.target.group and self.images == other.images)

    def __hash__(self):
        return hash((self.source, self.images))

    @property
    def key(self) -> tuple:
        return self.images

    def image(self) -> Subgroup:
        return Subgroup(self.target.group, tuple(sorted(self.images)))

    def as_dict(self) -> dict:
        return dict(zip(self.source.members, self.images))

    def compose(self, other: "Morphism") -> "Morphism":
        """``self ∘ other`` (apply ``other`` first)."""
        images = tuple(self(y) for y in other.images)
        witness = None
        if self.witness is not None and other.witness is not None:
            witness = int(self.source.group.mul(self.witness, other.witness))
        return Morphism(other.source, self.target, images, witness)

    def is_homomorphism(self) -> bool:
        S, T = self.source, self.target
        src = S.array
        f = self.as_dict()
        prod = S.group.mul(src[:, None], src[None, :])
        for i, a in enumerate(src):
            for j, b in enumerate(src):
                if f[int(prod[i, j])] != int(T.group.mul(f[int(a)], f[int(b)])):
                    return False
        return True

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)


def inclusion(P: Subgroup, Q: Subgroup | None = None) -> Morphism:
    return Morphism(P, Q if Q is not None else P, P.members, witness=0)


def conjugation(P: Subgroup, g: int, Q: Subgroup | None = None) -> Morphism:
    """The map ``c_g: P -> Q``; ``Q`` defaults to ``gPg^-1``."""
    images = tuple(int(x) for x in P.group.conj(g, P.array))
    if Q is None:
        Q = Subgroup(P.group, tuple(sorted(images)))
    return Morphism(P, Q, images, witness=int(g))
