"""A tour of the four sumset kinds.

Walks through plain sums, pairwise-distinct sums, and the two
adjacency-restricted sumsets (chain and cycle), over both the integers and a
prime field, and cross-checks the dynamic program against brute force.

Run:  python demos/01_sumset_tour.py
"""

from restrictedsums import (
    IntegerLattice,
    PrimeField,
    SetFamily,
    brute_force_oracle,
    sumset,
)

Z = IntegerLattice()

# Start with one family over the integers.  The four kinds only differ in
# which index tuples (a_1, ..., a_n) are admitted.
family = SetFamily(Z, [[0, 1, 2], [0, 1, 2], [0, 1, 2]])

print("family:", [list(a) for a in family.members])
for kind in ("plain", "distinct", "linear", "cyclic"):
    res = sumset(family, kind)
    print(f"  {kind:9s} -> {list(res.elements)}  (cardinality {res.cardinality})")

# plain:    every tuple counts, so sums run 0..6.
# distinct: all coordinates differ; for a 3-set that forces a permutation,
#           leaving the single sum 0+1+2 = 3.
# linear:   only neighbours must differ (a1 != a2, a2 != a3); sums 1..5.
# cyclic:   additionally a3 != a1, which here collapses back to the
#           permutations: {3}.

# The cyclic constraint can empty the sumset entirely.  Two symbols cannot
# 2-color a triangle:
tri = SetFamily(Z, [[0, 1]] * 3)
print("\ncyclic over {0,1}x3:", list(sumset(tri, "cyclic").elements), "(empty is a legal value)")

# Over a prime field the sums wrap around.  Same machinery, p-bit masks
# underneath instead of hash sets.
f7 = PrimeField(7)
mod_family = SetFamily(f7, [[0, 1, 2]] * 3)
print("\nover F_7:", list(sumset(mod_family, "linear").elements))

# Every kind has an independent brute-force oracle that enumerates all
# product tuples.  The dynamic program must agree with it exactly.
for kind in ("plain", "distinct", "linear", "cyclic"):
    fast = sumset(family, kind).elements
    slow = brute_force_oracle(family, kind).elements
    assert fast == slow, (kind, fast, slow)
print("\ndynamic program == brute-force oracle on all four kinds")

# Lattice points of any dimension work too; elements become int tuples.
z2 = IntegerLattice(2)
grid = SetFamily(z2, [[(0, 0), (1, 2)], [(0, 1), (2, 0)]])
print("\nZ^2 linear sums:", list(sumset(grid, "linear").elements))
