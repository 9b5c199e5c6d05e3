"""Named group families and a small text grammar for building them.

Grammar (whitespace is ignored)::

    EXPR := TERM (PRODUCT TERM)*          PRODUCT := 'x' | '×' | '*'
    TERM := NAME '(' INT (',' INT)* ')' | 'perm' '[' GEN ((',' | ';') GEN)* ']'
    GEN  := CYCLE+                        CYCLE := '(' INT* ')'

Points inside ``perm[...]`` are 0-based; points within a cycle may be
separated by commas or spaces.

Naming conventions (they differ between textbooks):

* ``D(n)`` is the dihedral group of ORDER n, so ``D(8)`` is the symmetry
  group of the square.
* ``Dic(n)`` is the dicyclic group of order n, ``Z/m ⋊ Z/4`` with the
  generator of Z/4 acting by inversion when m = n/4 is odd.
* ``AGL(1, q)`` is the affine group x -> ax + b over the prime field F_q.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian

from . import perm as _perm
from .errors import ArityError, DomainError, ExprSyntaxError
from .group import Group, group_from_generators
from .subgroups import is_prime, prime_factors

ARITY = {"Z": 1, "S": 1, "A": 1, "D": 1, "Dic": 1, "AGL": 2}


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    position: int = 0

    def __str__(self):
        return f"{self.name}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class PermList:
    generators: tuple  # each generator: tuple of cycles
    position: int = 0

    def __str__(self):
        gens = []
        for cycles in self.generators:
            gens.append("".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles) or "()")
        return "perm[" + ", ".join(gens) + "]"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __str__(self):
        return "x".join(str(f) for f in self.factors)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ExprSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise ExprSyntaxError(f"expected an integer, found {found!r}", start)
        return int(self.text[start:self.pos])

    def name(self) -> str:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            raise ExprSyntaxError(f"expected a group name, found {found!r}", start)
        return self.text[start:self.pos]

    def expr(self):
        factors = [self.term()]
        while self.peek() in ("x", "×", "*"):
            self.pos += 1
            factors.append(self.term())
        if self.peek():
            raise ExprSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self):
        self.peek()
        start = self.pos
        name = self.name()
        if name == "perm":
            return self.perm_list(start)
        if name not in ARITY:
            raise ExprSyntaxError(f"unknown group name {name!r}", start)
        self.expect("(")
        args = []
        if self.peek() != ")":
            args.append(self.integer())
            while self.peek() == ",":
                self.pos += 1
                args.append(self.integer())
        self.expect(")")
        if len(args) != ARITY[name]:
            raise ArityError(f"{name} takes {ARITY[name]} argument(s), got {len(args)}", start)
        node = Call(name, tuple(args), start)
        _check_domain(node)
        return node

    def perm_list(self, start: int) -> PermList:
        self.expect("[")
        gens = [self.generator()]
        while self.peek() in (",", ";"):
            self.pos += 1
            gens.append(self.generator())
        self.expect("]")
        for cycles in gens:
            points = [x for c in cycles for x in c]
            if len(points) != len(set(points)):
                raise DomainError("cycles of a generator must be disjoint", start)
        return PermList(tuple(gens), start)

    def generator(self) -> tuple:
        cycles = []
        if self.peek() != "(":
            raise ExprSyntaxError(f"expected a cycle, found {self.peek() or 'end of input'!r}", self.pos)
        while self.peek() == "(":
            self.pos += 1
            points = []
            while self.peek() not in (")", ""):
                if self.peek() == ",":
                    self.pos += 1
                    continue
                points.append(self.integer())
            self.expect(")")
            if len(points) > 1:
                cycles.append(tuple(points))
        return tuple(cycles)


def _check_domain(node: Call) -> None:
    name, args = node.name, node.args
    if any(a < 1 for a in args):
        raise DomainError(f"{node}: arguments must be positive", node.position)
    n = args[0]
    if name == "D" and n % 2:
        raise DomainError(f"{node}: the dihedral order must be even", node.position)
    if name == "Dic" and n % 4:
        raise DomainError(f"{node}: the dicyclic order must be a multiple of 4", node.position)
    if name == "AGL":
        if args[0] != 1:
            raise DomainError(f"{node}: only AGL(1, q) is supported", node.position)
        if not is_prime(args[1]):
            raise DomainError(f"{node}: q must be prime", node.position)


def parse(text: str):
    """Parse a group expression into ``Call``/``PermList``/``Product`` nodes."""
    return _Parser(text).expr()


# -- constructors --------------------------------------------------------


def _cycle(points) -> list:
    return [tuple(points)] if len(points) > 1 else []


def cyclic(n: int) -> tuple[int, list]:
    if n == 1:
        return 1, []
    return n, [_perm.from_cycles(_cycle(range(n)), n)]


def symmetric(n: int) -> tuple[int, list]:
    if n <= 1:
        return 1, []
    return n, [_perm.from_cycles([(0, 1)], n), _perm.from_cycles(_cycle(range(n)), n)]


def alternating(n: int) -> tuple[int, list]:
    if n <= 2:
        return max(n, 1), []
    return n, [_perm.from_cycles([(0, 1, i)], n) for i in range(2, n)]


def dihedral(order: int) -> tuple[int, list]:
    k = order // 2
    if k == 1:
        return 2, [(1, 0)]
    if k == 2:
        return 4, [(1, 0, 2, 3), (0, 1, 3, 2)]
    rotation = _perm.from_cycles([tuple(range(k))], k)
    reflection = tuple((-i) % k for i in range(k))
    return k, [rotation, reflection]


def dicyclic(order: int) -> tuple[int, list]:
    m = order // 4
    if m % 2:
        # Z/m ⋊ Z/4 on m + 4 points
        degree = m + 4
        a = _perm.from_cycles(_cycle(range(m)), degree)
        inversion = [(i, m - i) for i in range(1, (m + 1) // 2)]
        b = _perm.from_cycles(inversion + [(m, m + 1, m + 2, m + 3)], degree)
        return degree, [a, b] if m > 1 else [b]
    # <a, b | a^2m = 1, b^2 = a^m, b a b^-1 = a^-1> in its regular representation
    two_m = 2 * m

    def index(i, j):
        return (i % two_m) + two_m * j

    def left_mult(gi, gj):
        images = [0] * (2 * two_m)
        for j in (0, 1):
            for i in range(two_m):
                # a^gi b^gj * a^i b^j
                k = gi + (i if gj == 0 else -i)
                if gj + j == 2:
                    images[index(i, j)] = index(k + m, 0)
                else:
                    images[index(i, j)] = index(k, gj + j)
        return tuple(images)

    return 2 * two_m, [left_mult(1, 0), left_mult(0, 1)]


def _primitive_root(q: int) -> int:
    if q == 2:
        return 1
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in factors):
            return g
    raise ValueError(q)  # pragma: no cover


def affine(q: int) -> tuple[int, list]:
    translation = tuple((x + 1) % q for x in range(q))
    g = _primitive_root(q)
    scaling = tuple((g * x) % q for x in range(q))
    return q, [translation, scaling]


CONSTRUCTORS = {
    "Z": cyclic,
    "S": symmetric,
    "A": alternating,
    "D": dihedral,
    "Dic": dicyclic,
    "AGL": lambda one, q: affine(q),
}


def _realize(node) -> tuple[int, list]:
    if isinstance(node, Call):
        return CONSTRUCTORS[node.name](*node.args)
    if isinstance(node, PermList):
        points = [x for cycles in node.generators for c in cycles for x in c]
        degree = max(points, default=0) + 1
        return degree, [_perm.from_cycles(cycles, degree) for cycles in node.generators]
    if isinstance(node, Product):
        degree, gens = 0, []
        for factor in node.factors:
            d, fgens = _realize(factor)
            for g in fgens:
                shifted = list(range(degree)) + [degree + x for x in g]
                gens.append(shifted)
            degree += d
        gens = [tuple(g) + tuple(range(len(g), degree)) for g in gens]
        return degree, gens
    raise TypeError(f"not a group expression: {node!r}")


def build(node, name: str | None = None) -> Group:
    """Realise a parsed expression as a permutation group."""
    degree, gens = _realize(node)
    return group_from_generators(degree, gens, name=name or str(node))


def build_text(text: str) -> Group:
    return build(parse(text))


def expected_order(node) -> int:
    if isinstance(node, Product):
        out = 1
        for f in node.factors:
            out *= expected_order(f)
        return out
    if isinstance(node, Call):
        n = node.args[-1]
        if node.name == "S":
            return _factorial(n)
        if node.name == "A":
            return max(_factorial(n) // 2, 1)
        if node.name == "AGL":
            return n * (n - 1)
        return n
    raise TypeError("order of a perm[...] term is not known in advance")


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# -- catalogs -------------------------------------------------------------

# Groups exercised by the property and acceptance suites, all of order <= 100.
CATALOG = [
    "Z(1)", "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(7)", "Z(8)", "Z(9)",
    "Z(10)", "Z(12)", "Z(16)",
    "Z(2)xZ(2)", "Z(2)xZ(4)", "Z(2)xZ(2)xZ(2)", "Z(3)xZ(3)", "Z(2)xZ(6)",
    "Z(4)xZ(4)", "Z(2)xZ(8)",
    "S(3)", "S(4)", "A(4)", "A(5)",
    "D(8)", "D(10)", "D(12)", "D(14)", "D(16)", "D(18)", "D(20)", "D(24)",
    "Dic(8)", "Dic(12)", "Dic(16)", "Dic(20)", "Dic(24)",
    "AGL(1,5)", "AGL(1,7)",
    "S(3)xZ(2)", "S(3)xZ(3)", "S(3)xZ(4)", "Dic(12)xZ(2)", "S(3)xS(3)",
    "A(4)xZ(2)", "A(4)xZ(3)", "S(4)xZ(2)", "D(8)xZ(2)", "Dic(8)xZ(2)",
    "D(8)xZ(3)", "D(10)xZ(2)", "AGL(1,5)xZ(2)", "Dic(12)xZ(3)", "S(3)xZ(8)",
    "D(8)xS(3)", "A(4)xZ(4)", "AGL(1,5)xZ(4)", "S(3)xZ(5)", "D(10)xZ(5)",
    "A(4)xZ(2)xZ(2)", "S(4)xZ(3)",
]


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_catalog(max_order: int = 64) -> list[str]:
    """Every abelian group of order <= max_order, one expression per type."""
    out = []
    for n in range(1, max_order + 1):
        if n == 1:
            out.append("Z(1)")
            continue
        per_prime = []
        for p in prime_factors(n):
            e, m = 0, n
            while m % p == 0:
                m //= p
                e += 1
            per_prime.append([[p ** k for k in part] for part in _partitions(e)])
        for choice in _cartesian(*per_prime):
            factors = sorted(q for part in choice for q in part)
            out.append("x".join(f"Z({q})" for q in factors))
    return out
