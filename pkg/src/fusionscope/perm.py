"""Permutations as tuples of images on the points 0..n-1.

Products compose right to left: ``compose(a, b)`` applies ``b`` first.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import BadPermutation

Permutation = tuple


def check(images: Sequence[int], degree: int | None = None) -> Permutation:
    images = tuple(int(i) for i in images)
    n = len(images)
    if degree is not None and n != degree:
        raise BadPermutation(f"expected {degree} images, got {n}")
    if sorted(images) != list(range(n)):
        raise BadPermutation(f"{images} is not a bijection of 0..{n - 1}")
    return images


def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    return tuple(a[i] for i in b)


def inverse(a: Sequence[int]) -> Permutation:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def from_cycles(cycles: Iterable[Sequence[int]], degree: int | None = None) -> Permutation:
    """Build a permutation from disjoint cycles of 0-based points."""
    cycles = [tuple(int(x) for x in c) for c in cycles]
    top = max((max(c) for c in cycles if c), default=-1) + 1
    if degree is None:
        degree = max(top, 1)
    elif top > degree:
        raise BadPermutation(f"point {top - 1} outside degree {degree}")
    images = list(range(degree))
    seen = set()
    for c in cycles:
        if any(x < 0 for x in c):
            raise BadPermutation("points must be non-negative")
        if seen.intersection(c) or len(set(c)) != len(c):
            raise BadPermutation(f"cycles are not disjoint: {cycles}")
        seen.update(c)
        for i, x in enumerate(c):
            images[x] = c[(i + 1) % len(c)]
    return tuple(images)


def to_cycles(a: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its smallest point."""
    seen = [False] * len(a)
    cycles = []
    for start in range(len(a)):
        if seen[start] or a[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        x = a[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = a[x]
        cycles.append(tuple(cycle))
    return cycles


def format_cycles(a: Sequence[int]) -> str:
    cycles = to_cycles(a)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse ``"(0,1,2)(3,4)"``; points may be separated by commas or spaces."""
    text = text.strip()
    if not text:
        raise BadPermutation("empty permutation")
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(text):
        if text[pos:m.start()].strip():
            raise BadPermutation(f"unexpected text {text[pos:m.start()]!r}")
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(x) for x in body])
        except ValueError:
            raise BadPermutation(f"bad cycle {m.group(0)!r}") from None
        pos = m.end()
    if text[pos:].strip():
        raise BadPermutation(f"unexpected text {text[pos:]!r}")
    return from_cycles(cycles, degree)
