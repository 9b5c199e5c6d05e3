"""Brute-force reference implementations used to check the library.

Everything here works on plain permutation tuples and Python sets and shares
no code with the package beyond the group constructors.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter


def compose(a, b):
    """a∘b, apply b first."""
    return tuple(a[i] for i in b)


def inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def identity(n):
    return tuple(range(n))


def closure(gens, degree):
    e = identity(degree)
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def elements(G):
    """All elements of a library Group as permutation tuples."""
    return [G.element(i) for i in range(G.order)]


def order_of(x):
    e = identity(len(x))
    k, y = 1, x
    while y != e:
        y = compose(y, x)
        k += 1
    return k


def conj(g, x):
    return compose(compose(g, x), inverse(g))


def conjugacy_classes(elems):
    left = set(elems)
    out = []
    while left:
        x = min(left)
        cls = {conj(g, x) for g in elems}
        out.append(cls)
        left -= cls
    return out


def subgroups(elems, max_gens=4):
    """Every subgroup of a group of order ≤ 16 (generated by ≤ max_gens elements)."""
    degree = len(next(iter(elems)))
    found = set()
    elems = sorted(elems)
    for k in range(0, max_gens + 1):
        for gens in itertools.combinations(elems, k):
            found.add(frozenset(closure(gens, degree)))
    return found


def is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def centralizer(elems, H):
    return {g for g in elems if all(compose(g, h) == compose(h, g) for h in H)}


def normalizer(elems, H):
    H = set(H)
    return {g for g in elems if {conj(g, h) for h in H} == H}


def transporter(elems, P, Q):
    Q = set(Q)
    return {g for g in elems if all(conj(g, x) in Q for x in P)}


def homs_to_cyclic(gens, elems, p):
    """All homomorphisms to Z/p, as dicts, by trying every generator assignment."""
    degree = len(gens[0]) if gens else 1
    out = []
    for values in itertools.product(range(p), repeat=len(gens)):
        f = {identity(degree): 0}
        todo = [identity(degree)]
        ok = True
        while todo and ok:
            x = todo.pop()
            for g, v in zip(gens, values):
                y = compose(x, g)
                w = (f[x] + v) % p
                if y in f:
                    if f[y] != w:
                        ok = False
                        break
                else:
                    f[y] = w
                    todo.append(y)
        if ok:
            out.append(f)
    return out


def prime_power_decomposition(cyclic_orders, p):
    """Multiplicities k -> n_k for a direct sum of Z/n, read off the orders."""
    counts = Counter()
    for n in cyclic_orders:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        if k:
            counts[k] += 1
    return dict(counts)


def isomorphic_brute(A, B):
    """Search for an isomorphism between two groups given as element sets.

    Tries every assignment of images to a fixed generating set and checks the
    induced map is a well-defined bijective homomorphism.
    """
    A, B = list(A), list(B)
    if len(A) != len(B):
        return False
    degree_a = len(A[0])
    e_a = identity(degree_a)
    # a small generating set, greedy by element order
    gens, current = [], {e_a}
    for x in sorted(A, key=lambda x: (-order_of(x), x)):
        if x not in current:
            gens.append(x)
            current = closure(gens, degree_a)
        if len(current) == len(A):
            break
    orders_b = {y: order_of(y) for y in B}
    choices = [[y for y in B if orders_b[y] == order_of(g)] for g in gens]
    e_b = identity(len(B[0]))
    for images in itertools.product(*choices):
        f = {e_a: e_b}
        todo = [e_a]
        ok = True
        while todo and ok:
            x = todo.pop()
            for g, h in zip(gens, images):
                y, w = compose(x, g), compose(f[x], h)
                if y in f:
                    if f[y] != w:
                        ok = False
                        break
                else:
                    f[y] = w
                    todo.append(y)
        if ok and len(set(f.values())) == len(A):
            return True
    return False


def log(n, p):
    return round(math.log(n, p)) if n > 1 else 0
