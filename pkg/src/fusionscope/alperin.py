"""Factoring G-subconjugations through automizers of essential subgroups and S.

Search is breadth first over elementwise maps P -> S.  It starts at the
inclusion and composes with an element of Aut_G(R) for an admissible R that
contains the current image.  Admissible means R = S or R essential and fully
normalized.  Every element of Aut_G(R) counts as one step, so a conjugation
by an element of S is a single step through S.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotAFusionMorphism, SearchExhausted
from .fusion import FusionSystem
from .group import Morphism, Subgroup


@dataclass(frozen=True)
class AlperinStep:
    R: Subgroup
    phi: Morphism  # an element of Aut_G(R)


@dataclass
class AlperinFactorization:
    source: Subgroup
    images: tuple  # the factored map, as images of source.members
    steps: tuple  # AlperinStep, applied first to last

    @property
    def intermediates(self) -> list[Subgroup]:
        """Q_0 = P, Q_1, ..., the images after each step."""
        grp = self.source.group
        current = list(self.source.members)
        out = [self.source]
        for step in self.steps:
            current = [step.phi(x) for x in current]
            out.append(Subgroup(grp, tuple(sorted(current))))
        return out

    def composite(self) -> tuple:
        current = list(self.source.members)
        for step in self.steps:
            current = [step.phi(x) for x in current]
        return tuple(current)

    def to_json(self) -> dict:
        return {
            "source": list(self.source.members),
            "target": list(self.images),
            "steps": [{"R": list(s.R.members),
                       "phi": {str(x): y for x, y in zip(s.R.members, s.phi.images)}}
                      for s in self.steps],
        }


def admissible(F: FusionSystem) -> list[Subgroup]:
    """S first, then fully normalized essential subgroups by (order, members)."""
    return [F.sylow] + [P for P in F.essentials if F.is_fully_normalized(P)]


def _as_morphism(F: FusionSystem, m) -> Morphism:
    if isinstance(m, Morphism):
        P, images = m.source, tuple(m.images)
    else:
        P, images = m
    target = Morphism(P, F.sylow, images, None)
    if P.group is not F.group or not F.is_morphism(target):
        raise NotAFusionMorphism("map is not a G-subconjugation into the Sylow subgroup")
    return target


def alperin_decompose(F: FusionSystem, m) -> AlperinFactorization:
    """Shortest factorization of ``m`` (a Morphism or a pair (P, images))."""
    m = _as_morphism(F, m)
    P = m.source
    start = P.members
    goal = tuple(m.images)
    moves = [(R, phi) for R in admissible(F) for phi in F.automizer_maps(R)]
    parent = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            break
        for R, phi in moves:
            if not R.mask[list(state)].all():
                continue
            nxt = tuple(phi(x) for x in state)
            if nxt not in parent:
                parent[nxt] = (state, AlperinStep(R, phi))
                queue.append(nxt)
    if goal not in parent:
        raise SearchExhausted("no factorization found")
    steps = []
    state = goal
    while parent[state] is not None:
        state, step = parent[state]
        steps.append(step)
    return AlperinFactorization(P, goal, tuple(reversed(steps)))


def verify_factorization(F: FusionSystem, fac: AlperinFactorization) -> bool:
    """Check every condition of the factorization elementwise."""
    S = F.sylow
    for step in fac.steps:
        R = step.R
        if R != S and not (F.is_essential(R) and F.is_fully_normalized(R)):
            return False
        if step.phi.source != R or step.phi.images not in {f.images for f in F.automizer_maps(R)}:
            return False
    current = list(fac.source.members)
    for step in fac.steps:
        if not step.R.mask[current].all():
            return False
        current = [step.phi(x) for x in current]
        if not step.R.mask[current].all():
            return False
    return tuple(current) == tuple(fac.images)
