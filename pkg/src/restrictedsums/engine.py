"""Exact sumset computation by layered dynamic programming.

Four kinds of sumsets over one family (A_1, ..., A_n):

* ``plain``     -- all sums a_1 + ... + a_n,
* ``distinct``  -- sums over tuples whose coordinates are pairwise distinct,
* ``linear``    -- sums with a_i != a_{i+1} for consecutive slots,
* ``cyclic``    -- linear plus a_n != a_1.

Partial-sum sets are p-bit masks over F_p (adding an element is a rotation)
and hash sets over Z^r.  ``brute_force_oracle`` recomputes any kind by full
tuple enumeration and is the independent cross-check used in tests; it never
shares code with the DP path.

Conventions: n = 1 has no adjacency constraints, so linear and cyclic both
return A_1.  Empty results are legal values (e.g. cyclic over ({0,1},)*3).
"""

import itertools

from .domain import IntegerLattice, PrimeField
from .errors import InputError, ResourceCapExceeded

KINDS = ("plain", "distinct", "linear", "cyclic")

DEFAULT_ORACLE_CAP = 10**8


class SetFamily:
    """An ordered family (A_1, ..., A_n) of finite sets over one domain.

    Members are normalized to sorted tuples of distinct, validated elements.
    """

    __slots__ = ("domain", "members")

    def __init__(self, domain, sets):
        members = []
        for s in sets:
            elems = list(s)
            for e in elems:
                domain.validate(e)
            elems = tuple(sorted(set(elems)))
            if not elems:
                raise InputError("family members must be nonempty")
            members.append(elems)
        if not members:
            raise InputError("a family needs at least one member set")
        self.domain = domain
        self.members = tuple(members)

    @classmethod
    def _trusted(cls, domain, members):
        # sweep-internal fast path: members are already sorted distinct tuples
        fam = object.__new__(cls)
        fam.domain = domain
        fam.members = members
        return fam

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def sizes(self) -> tuple:
        return tuple(len(a) for a in self.members)

    @property
    def product_size(self) -> int:
        out = 1
        for a in self.members:
            out *= len(a)
        return out

    def __repr__(self):
        return f"SetFamily({self.domain!r}, {list(map(list, self.members))})"


class SumsetResult:
    """A computed sumset: deduplicated, sorted elements plus the kind."""

    __slots__ = ("kind", "elements")

    def __init__(self, kind, elements):
        self.kind = kind
        self.elements = tuple(elements)

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __eq__(self, other):
        return (isinstance(other, SumsetResult)
                and other.kind == self.kind and other.elements == self.elements)

    def __repr__(self):
        return f"SumsetResult({self.kind!r}, {list(self.elements)})"


# ---------------------------------------------------------------------------
# partial-sum set algebras


class _MaskSums:
    """Sum sets over F_p as p-bit masks; bit s set iff sum s is reachable."""

    __slots__ = ("p", "full")
    empty = 0

    def __init__(self, p):
        self.p = p
        self.full = (1 << p) - 1

    def singleton(self, e):
        return 1 << e

    def add(self, sums, e):
        if e == 0:
            return sums
        return ((sums << e) | (sums >> (self.p - e))) & self.full

    def union(self, a, b):
        return a | b

    def union_all(self, it):
        out = 0
        for m in it:
            out |= m
        return out

    def cardinality(self, sums):
        return sums.bit_count()

    def elements(self, sums):
        return [s for s in range(self.p) if (sums >> s) & 1]


class _HashSums:
    """Sum sets over Z^r as frozensets of lattice points."""

    __slots__ = ("_add",)
    empty = frozenset()

    def __init__(self, domain):
        self._add = domain.add

    def singleton(self, e):
        return frozenset((e,))

    def add(self, sums, e):
        add = self._add
        return frozenset(add(s, e) for s in sums)

    def union(self, a, b):
        return a | b

    def union_all(self, it):
        out = set()
        for s in it:
            out |= s
        return frozenset(out)

    def cardinality(self, sums):
        return len(sums)

    def elements(self, sums):
        return sorted(sums)


def _algebra(domain):
    if isinstance(domain, PrimeField):
        return _MaskSums(domain.p)
    return _HashSums(domain)


# ---------------------------------------------------------------------------
# layered dynamic programs, state = (last element chosen, set of partial sums)


def _advance(alg, layer, choices):
    """One DP layer: extend every (last, sums) state by each b != last."""
    items = list(layer.items())
    k = len(items)
    # prefix/suffix unions give "all states except the one ending at b" in O(k)
    pre = [alg.empty] * (k + 1)
    for i in range(k):
        pre[i + 1] = alg.union(pre[i], items[i][1])
    suf = [alg.empty] * (k + 1)
    for i in range(k - 1, -1, -1):
        suf[i] = alg.union(suf[i + 1], items[i][1])
    pos = {e: i for i, (e, _) in enumerate(items)}
    total = pre[k]
    nxt = {}
    for b in choices:
        i = pos.get(b)
        u = total if i is None else alg.union(pre[i], suf[i + 1])
        if u:
            nxt[b] = alg.add(u, b)
    return nxt


def _final_union(alg, layer, choices, banned):
    """Last DP layer, merged: union over b != banned of reachable sums + b."""
    items = list(layer.items())
    k = len(items)
    pre = [alg.empty] * (k + 1)
    for i in range(k):
        pre[i + 1] = alg.union(pre[i], items[i][1])
    suf = [alg.empty] * (k + 1)
    for i in range(k - 1, -1, -1):
        suf[i] = alg.union(suf[i + 1], items[i][1])
    pos = {e: i for i, (e, _) in enumerate(items)}
    total = pre[k]
    out = alg.empty
    for b in choices:
        if b == banned:
            continue
        i = pos.get(b)
        u = total if i is None else alg.union(pre[i], suf[i + 1])
        if u:
            out = alg.union(out, alg.add(u, b))
    return out


def _plain_sums(alg, domain, members):
    cur = alg.union_all(alg.singleton(a) for a in members[0])
    for a_set in members[1:]:
        cur = alg.union_all(alg.add(cur, a) for a in a_set)
    return cur


def _linear_sums(alg, domain, members):
    if len(members) == 1:
        return alg.union_all(alg.singleton(a) for a in members[0])
    layer = {a: alg.singleton(a) for a in members[0]}
    for a_set in members[1:-1]:
        layer = _advance(alg, layer, a_set)
        if not layer:
            return alg.empty
    return _final_union(alg, layer, members[-1], banned=None)


def _cyclic_sums(alg, domain, members):
    if len(members) == 1:
        return alg.union_all(alg.singleton(a) for a in members[0])
    out = alg.empty
    # fix the first element; the wrap-around constraint then bans it in the
    # last slot while middle slots stay unconstrained against it
    for first in members[0]:
        layer = {first: alg.singleton(first)}
        for a_set in members[1:-1]:
            layer = _advance(alg, layer, a_set)
            if not layer:
                break
        if not layer:
            continue
        out = alg.union(out, _final_union(alg, layer, members[-1], banned=first))
    return out


def _distinct_sums(alg, domain, members):
    # A tuple with pairwise distinct coordinates is a system of distinct
    # representatives, so sweep the value universe once and track which
    # slots are filled: state = (slot bitmask, set of partial sums).
    n = len(members)
    slots_of = {}
    for i, a_set in enumerate(members):
        for v in a_set:
            slots_of[v] = slots_of.get(v, 0) | (1 << i)
    states = {0: alg.singleton(domain.zero)}
    for v in sorted(slots_of):
        slots = slots_of[v]
        updates = {}
        for pm, sums in states.items():
            avail = slots & ~pm
            if not avail:
                continue
            shifted = alg.add(sums, v)
            while avail:
                low = avail & -avail
                npm = pm | low
                prev = updates.get(npm)
                updates[npm] = shifted if prev is None else alg.union(prev, shifted)
                avail ^= low
        for pm, sums in updates.items():
            prev = states.get(pm)
            states[pm] = sums if prev is None else alg.union(prev, sums)
    return states.get((1 << n) - 1, alg.empty)


_SUMS = {
    "plain": _plain_sums,
    "distinct": _distinct_sums,
    "linear": _linear_sums,
    "cyclic": _cyclic_sums,
}


def _kind_sums(domain, members, kind):
    try:
        fn = _SUMS[kind]
    except KeyError:
        raise InputError(f"unknown sumset kind {kind!r}") from None
    alg = _algebra(domain)
    return alg, fn(alg, domain, members)


def _cardinality(domain, members, kind) -> int:
    alg, sums = _kind_sums(domain, members, kind)
    return alg.cardinality(sums)


# ---------------------------------------------------------------------------
# public operations


def sumset(family: SetFamily, kind: str) -> SumsetResult:
    """Compute one sumset kind for a family via the layered DP."""
    alg, sums = _kind_sums(family.domain, family.members, kind)
    return SumsetResult(kind, alg.elements(sums))


def plain_sumset(family: SetFamily) -> SumsetResult:
    return sumset(family, "plain")


def distinct_sumset(family: SetFamily) -> SumsetResult:
    return sumset(family, "distinct")


def linear_restricted_sumset(family: SetFamily) -> SumsetResult:
    """L(A_1,...,A_n): sums whose consecutive summands differ."""
    return sumset(family, "linear")


def cyclic_restricted_sumset(family: SetFamily) -> SumsetResult:
    """C(A_1,...,A_n): consecutive summands differ and a_n != a_1."""
    return sumset(family, "cyclic")


def sumset_cardinality(family: SetFamily, kind: str) -> int:
    """Cardinality only; skips materializing the sorted element list."""
    return _cardinality(family.domain, family.members, kind)


def _tuple_allowed(t, kind):
    if kind == "plain":
        return True
    if kind == "distinct":
        return len(set(t)) == len(t)
    if any(t[i] == t[i + 1] for i in range(len(t) - 1)):
        return False
    if kind == "cyclic":
        return len(t) == 1 or t[0] != t[-1]
    return True


def brute_force_oracle(family: SetFamily, kind: str,
                       cap: int = DEFAULT_ORACLE_CAP) -> SumsetResult:
    """Recompute a sumset by enumerating every tuple of the family.

    Exponential; guarded by ``cap`` on the tuple count.  Kept free of any
    DP code so it can serve as an independent oracle.
    """
    if kind not in KINDS:
        raise InputError(f"unknown sumset kind {kind!r}")
    if family.product_size > cap:
        raise ResourceCapExceeded(
            f"oracle would enumerate {family.product_size} tuples (cap {cap})")
    domain = family.domain
    if isinstance(domain, PrimeField):
        p = domain.p
        fold = lambda t: sum(t) % p
    elif isinstance(domain, IntegerLattice) and domain.dim == 1:
        fold = sum
    else:
        fold = lambda t: tuple(map(sum, zip(*t)))
    out = set()
    for t in itertools.product(*family.members):
        if _tuple_allowed(t, kind):
            out.add(fold(t))
    return SumsetResult(kind, sorted(out))
