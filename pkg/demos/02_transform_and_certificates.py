"""The polynomial machinery behind the lower bounds.

Shows sparse coefficient extraction, the falling-factorial transform and its
central-coefficient identity, the closed forms for path/cycle difference
products, and how a nonvanishing coefficient certifies a sumset lower bound.

Run:  python demos/02_transform_and_certificates.py
"""

import math

from restrictedsums import (
    MultiPoly,
    certified_lower_bound,
    coeff_of_product_with_linear_power,
    cycle_polynomial,
    even_cycle_coefficient,
    falling_factorial_transform,
    odd_path_coefficient,
    path3_coefficient,
    path_polynomial,
    transform_identity_holds,
)

# The chain constraint a_i != a_{i+1} is encoded by the path product
# (x1-x2)(x2-x3)...(x_{n-1}-x_n): it vanishes exactly on the forbidden
# tuples.  The cycle product appends the wrap-around factor (x_n-x_1).
q3 = path_polynomial(3)
p4 = cycle_polynomial(4)
print("path_3  =", q3)
print("cycle_4 =", p4)

# Coefficients of P * (x1+...+xn)^m are extracted term by term through
# multinomial coefficients; the linear power is never expanded.
c = coeff_of_product_with_linear_power(q3, (1, 1, 1))
print("\n[x1*x2*x3] path_3 * (x1+x2+x3) =", c)

# The falling-factorial transform sends x1^j1...xn^jn to (x)_j1...(x)_jn.
# For the difference products it collapses to a monomial:
print("\ntransform(path_3)  =", falling_factorial_transform(q3))
print("transform(cycle_4) =", falling_factorial_transform(p4))
for n in (6, 8, 10, 12):
    print(f"transform(cycle_{n}) =", falling_factorial_transform(cycle_polynomial(n)))

# The transform earns its keep through an exact identity: evaluating it at k
# recovers the central coefficient of P * (sum x_i)^(kn - deg P), up to the
# factorial factor (kn - deg P)!/(k!)^n.  Checked here with both sides
# computed independently:
for n, k in ((4, 2), (5, 2), (6, 3)):
    p = cycle_polynomial(n) if n % 2 == 0 else path_polynomial(n)
    assert transform_identity_holds(p, k)
print("\ncentral-coefficient identity holds on sample (n, k) pairs")

# That identity turns into closed forms for the central coefficients.
print("\nclosed forms vs direct extraction:")
print("  path3(2,3,2)        =", path3_coefficient(2, 3, 2),
      "==", coeff_of_product_with_linear_power(q3, (2, 3, 2)))
print("  even_cycle(n=6,k=3) =", even_cycle_coefficient(6, 3),
      "==", coeff_of_product_with_linear_power(cycle_polynomial(6), (3,) * 6))
print("  odd_path(n=5,k=2)   =", odd_path_coefficient(5, 2),
      "==", coeff_of_product_with_linear_power(path_polynomial(5), (2,) * 5))

# A nonzero central coefficient (nonzero mod p over F_p) certifies
# |{a_1+...+a_n : a_i in A_i, P(a) != 0}| >= sum(|A_i|-1) - deg P + 1.
# With P the path product, that set is exactly the chain-restricted sumset.
cert = certified_lower_bound(q3, sizes=(2, 3, 2))
print("\ncertificate for |L(A1,A2,A3)| with sizes (2,3,2) over Z:", cert)

cert_mod = certified_lower_bound(cycle_polynomial(4), sizes=(3, 3, 3, 3), torsion=11)
print("certificate for |C| with sizes (3,3,3,3) over F_11:", cert_mod)

# When the coefficient dies modulo the characteristic there is no
# certificate; the machinery says so instead of bluffing.
dead = certified_lower_bound(cycle_polynomial(2), sizes=(2, 2), torsion=2)
print("coefficient", dead.coefficient, "mod 2 ->", dead.residue,
      "-> certified:", dead.certified)
