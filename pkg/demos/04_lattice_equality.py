"""Equality classification over the integers.

For a single set A repeated n times, the chain/cycle sumsets meet their
lower bounds exactly when A is an arithmetic progression, plus one genuine
exceptional family (3-element sets at n=5, cyclic) and two structural cells
at n=3 where the cyclic bound is tight for every set.

Run:  python demos/04_lattice_equality.py
"""

import itertools

from restrictedsums import (
    IntegerLattice,
    SetFamily,
    SweepConfig,
    TheoremViolation,
    classify_equality,
    eval_bound,
    is_arithmetic_progression,
    run_sweep,
    sumset,
    verify_torsionfree,
)

Z = IntegerLattice()

# The bounds themselves hold for every finite A (checked per instance):
for a in ([0, 1, 2], [0, 1, 5], [0, 2, 3, 9]):
    for kind in ("linear", "cyclic"):
        rep = verify_torsionfree(a, 4, kind)
        print(f"A={a!r:14s} n=4 {kind:6s}: bound {rep.bound:2d} "
              f"actual {rep.actual:2d} -> {rep.verdict}")

# Arithmetic progressions always sit exactly on the bound:
print("\nclassify {0,2,4}, n=4, linear :", classify_equality([0, 2, 4], 4, "linear"))
print("classify {0,1,3,7}, n=4, linear:", classify_equality([0, 1, 3, 7], 4, "linear"))

# The genuine exceptional family: any 3-element set at n=5, cyclic, has
# exactly three achievable sums (2a+2b+c over the three ways to choose c),
# which equals the bound even for non-APs.
a = [0, 1, 5]
fam = SetFamily(Z, [a] * 5)
print("\n5-cycle sums of {0,1,5}:", list(sumset(fam, "cyclic").elements),
      "| bound", eval_bound("torsionfree-cyclic", (3,) * 5))
print("classify {0,1,5}, n=5, cyclic:", classify_equality([0, 1, 5], 5, "cyclic"))

# At n=3 the cyclic sumset is the pairwise-distinct triple sumset, and its
# bound is tight for EVERY 3- or 4-element set: a 3-set admits only
# permutations (one sum), a 4-set exactly the four sums S - x.  The
# classifier treats equality-without-AP as a loud violation, so these two
# cells always raise:
try:
    classify_equality([0, 1, 3], 3, "cyclic")
except TheoremViolation as exc:
    print("\nstructural equality at n=3 raises:", exc)

# A window sweep shows the whole picture; the n=3 cyclic cells surface as
# violated records, everything else classifies cleanly.
cfg = SweepConfig(check="equality", domain="int", window=(0, 9),
                  sizes=(3, 4), n_values=(3, 4, 5), kinds=("linear", "cyclic"))
summary = run_sweep(cfg)
print("\nequality sweep over A within {0..9}:", dict(summary.verdicts))

aps = [a for a in itertools.combinations(range(10), 3)
       if is_arithmetic_progression(a)[0]]
print("3-element APs in the window:", len(aps),
      "| exceptional (3,5) records:",
      summary.verdicts.get("exceptional-k3n5", 0),
      "= non-AP 3-sets:", len(list(itertools.combinations(range(10), 3))) - len(aps))
