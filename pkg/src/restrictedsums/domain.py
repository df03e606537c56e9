"""Element domains: prime fields Z/pZ and integer lattices Z^r.

Field elements are plain ints in [0, p).  Lattice points are plain ints when
the dimension is 1 and int tuples otherwise; the lattice order is
lexicographic, which is translation compatible (a < b implies a+c < b+c and
-b < -a).  Domain objects are immutable and hashable so families, sweep
configs and worker processes can share them freely.
"""

import math

from .errors import InputError


def _is_prime(n: int) -> bool:
    """Deterministic trial division; moduli are desk-scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The additive group of Z/pZ for a prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
            raise InputError(f"modulus must be a prime integer, got {p!r}")
        self.p = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    def torsion_bound(self):
        return self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def validate(self, x):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.p:
            raise InputError(f"{x!r} is not a residue in [0, {self.p})")
        return x

    def format_element(self, x) -> str:
        return str(x)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))


class IntegerLattice:
    """Z^r with the lexicographic order; r = 1 uses bare ints."""

    __slots__ = ("dim",)

    def __init__(self, dim: int = 1):
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise InputError(f"lattice dimension must be a positive integer, got {dim!r}")
        self.dim = dim

    @property
    def zero(self):
        return 0 if self.dim == 1 else (0,) * self.dim

    @property
    def name(self) -> str:
        return "Z" if self.dim == 1 else f"Z^{self.dim}"

    def torsion_bound(self):
        return math.inf

    def add(self, a, b):
        if self.dim == 1:
            return a + b
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        if self.dim == 1:
            return a - b
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        if self.dim == 1:
            return -a
        return tuple(-x for x in a)

    def validate(self, x):
        if self.dim == 1:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"{x!r} is not an integer lattice point")
            return x
        if (not isinstance(x, tuple) or len(x) != self.dim
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in x)):
            raise InputError(f"{x!r} is not an int tuple of length {self.dim}")
        return x

    def format_element(self, x) -> str:
        if self.dim == 1:
            return str(x)
        return "(" + ",".join(str(c) for c in x) + ")"

    def __repr__(self):
        return f"IntegerLattice({self.dim})"

    def __eq__(self, other):
        return isinstance(other, IntegerLattice) and other.dim == self.dim

    def __hash__(self):
        return hash(("IntegerLattice", self.dim))


def min_torsion(domain):
    """Least order of a nonzero element: p for F_p, infinity for Z^r."""
    return domain.torsion_bound()


def lex_compare(a, b) -> int:
    """Three-way comparison (-1, 0, 1) in the domain order.

    Ints compare as usual; tuples lexicographically.  Mixing shapes or
    tuple lengths is a dimension mismatch.
    """
    a_tup = isinstance(a, tuple)
    if a_tup != isinstance(b, tuple):
        raise InputError(f"cannot compare {a!r} with {b!r}")
    if a_tup and len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return (a > b) - (a < b)


def _elem_sub(a, b):
    if isinstance(a, tuple):
        return tuple(x - y for x, y in zip(a, b))
    return a - b


def is_arithmetic_progression(elements):
    """Classify a strictly increasing element list as an AP.

    Returns (True, d) with the common difference for lists of 2 or more
    elements, (True, None) for 0 or 1 elements.  Lists of size <= 2 always
    count as progressions, which keeps the classifier total.
    """
    elems = list(elements)
    for x, y in zip(elems, elems[1:]):
        if lex_compare(x, y) >= 0:
            raise InputError("elements must be strictly increasing and distinct")
    if len(elems) < 2:
        return True, None
    d = _elem_sub(elems[1], elems[0])
    for x, y in zip(elems[1:], elems[2:]):
        if _elem_sub(y, x) != d:
            return False, None
    return True, d
