"""Primary components and coefficients of p-torsion of finite abelian groups."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAbelian
from .group import Subgroup
from .subgroups import as_subgroup, is_p_power, p_part, prime_factors


def _require_abelian(A: Subgroup) -> None:
    grp = A.group
    gens = A.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if int(grp.mul(a, b)) != int(grp.mul(b, a)):
                raise NotAbelian("group is not abelian")


@dataclass(frozen=True)
class TorsionProfile:
    """Multiplicities ``k -> n_k`` of the summands Z/p^k at the prime p."""

    p: int
    multiplicities: tuple  # sorted ((k, n_k), ...) with n_k > 0

    @classmethod
    def from_dict(cls, p: int, counts: dict) -> "TorsionProfile":
        return cls(p, tuple(sorted((int(k), int(n)) for k, n in counts.items() if n)))

    def as_dict(self) -> dict:
        return dict(self.multiplicities)

    def as_tuple(self) -> tuple:
        """Prime powers in ascending order, e.g. ``(2, 2, 2, 4)``."""
        return tuple(self.p ** k for k, n in self.multiplicities for _ in range(n))

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.multiplicities)

    @property
    def log_order(self) -> int:
        return sum(k * n for k, n in self.multiplicities)

    def __add__(self, other: "TorsionProfile") -> "TorsionProfile":
        if other.p != self.p:
            raise ValueError("profiles at different primes")
        counts = self.as_dict()
        for k, n in other.multiplicities:
            counts[k] = counts.get(k, 0) + n
        return TorsionProfile.from_dict(self.p, counts)

    def __str__(self):
        return "(" + ",".join(str(q) for q in self.as_tuple()) + ")"

    def to_json(self) -> dict:
        return {"p": self.p, "n": {str(k): n for k, n in self.multiplicities}}


def primary_component(A, p: int) -> Subgroup:
    """Elements of p-power order."""
    A = as_subgroup(A)
    _require_abelian(A)
    orders = A.group.element_orders[A.array]
    keep = [x for x, o in zip(A.members, orders) if is_p_power(int(o), p)]
    return Subgroup(A.group, tuple(keep))


def counting_sequence(A, p: int) -> list[int]:
    """``a_j = log_p |{x : x^(p^j) = 1}|`` for j = 0, 1, ... until it stabilises."""
    A = as_subgroup(A)
    orders = A.group.element_orders[A.array]
    top = round(math.log(p_part(A.order, p), p))
    seq = []
    j = 0
    while True:
        count = int(np.count_nonzero((p ** j) % orders == 0))
        seq.append(round(math.log(count, p)))
        if seq[-1] == top:
            return seq
        j += 1


def torsion_profile(A, p: int) -> TorsionProfile:
    A = as_subgroup(A)
    _require_abelian(A)
    a = counting_sequence(A, p)
    a = a + [a[-1], a[-1]]
    counts = {j: (a[j] - a[j - 1]) - (a[j + 1] - a[j]) for j in range(1, len(a) - 1)}
    return TorsionProfile.from_dict(p, counts)


def full_profile(A) -> dict[int, TorsionProfile]:
    A = as_subgroup(A)
    return {p: torsion_profile(A, p) for p in prime_factors(A.order)}


def abelian_p_equivalent(A, B, p: int) -> bool:
    return torsion_profile(A, p) == torsion_profile(B, p)


def invariant_factors(A) -> list[int]:
    """Invariant factors d1 | d2 | ... of a finite abelian group."""
    profiles = full_profile(A)
    columns = [sorted(prof.as_tuple(), reverse=True) for prof in profiles.values()]
    width = max((len(c) for c in columns), default=0)
    factors = []
    for i in range(width):
        d = 1
        for c in columns:
            if i < len(c):
                d *= c[i]
        factors.append(d)
    return sorted(factors)
