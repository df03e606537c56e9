"""Exact polynomial machinery for certified sumset lower bounds.

``MultiPoly`` is a sparse multivariate polynomial over Z (exponent tuple ->
int coefficient); ``UniPoly`` is a dense univariate polynomial over Z.  On
top of these sit:

* coefficient extraction from P * (x_1 + ... + x_n)^m without expanding the
  linear power (each sparse term of P meets the power through one
  multinomial coefficient),
* the falling-factorial transform sending x_1^{j_1} ... x_n^{j_n} to
  (x)_{j_1} ... (x)_{j_n}, with the identity tying its evaluation at k to
  the central coefficient of P * (sum x_i)^{kn - deg P},
* closed forms for the path/cycle difference products and the resulting
  nonvanishing certificates (Combinatorial Nullstellensatz style).

All arithmetic is arbitrary-precision; factorial-ratio closed forms go
through fractions.Fraction and are asserted integral, never rounded.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


def _multinomial(m: int, parts) -> int:
    """m! / (parts_1! * ... * parts_k!) for nonnegative parts summing to m."""
    out = 1
    s = 0
    for e in parts:
        s += e
        out *= math.comb(s, e)
    assert s == m
    return out


def linear_power_coeff(exponents, m: int) -> int:
    """Coefficient of the monomial with the given exponents in (x_1+...+x_n)^m.

    Zero when the exponents do not sum to m (the coefficient genuinely is 0).
    """
    exponents = tuple(exponents)
    if any(e < 0 for e in exponents):
        raise InputError("exponents must be nonnegative")
    if sum(exponents) != m:
        return 0
    return _multinomial(m, exponents)


class MultiPoly:
    """Sparse multivariate polynomial over Z with a fixed variable count."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise InputError("need at least one variable")
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 or not isinstance(e, int) for e in exps):
                raise InputError(f"bad exponent vector {exps!r} for {nvars} variables")
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def constant(cls, c: int, nvars: int):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int):
        """x_i (0-based index) as a polynomial in nvars variables."""
        if not 0 <= i < nvars:
            raise InputError(f"variable index {i} out of range")
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, nvars: int):
        """x_1 + x_2 + ... + x_n."""
        out = {}
        for i in range(nvars):
            exps = [0] * nvars
            exps[i] = 1
            out[tuple(exps)] = 1
        return cls(nvars, out)

    def total_degree(self) -> int:
        """Max total degree over stored terms; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def _check_compatible(self, other):
        if other.nvars != self.nvars:
            raise InputError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other, self.nvars)
        self._check_compatible(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            out[exps] = out.get(exps, 0) + c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check_compatible(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative power")
        out = MultiPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, MultiPoly)
                and other.nvars == self.nvars and other.terms == self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        # canonical sorted-monomial form, e.g. "2*x1^2*x3 - x2"
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if body and mag == 1:
                lead = body
            elif body:
                lead = f"{mag}*{body}"
            else:
                lead = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, lead))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact product with term merging."""
    return p * q


class UniPoly:
    """Dense univariate polynomial over Z; coeffs[i] is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def monomial(cls, c: int, degree: int):
        """c * x^degree."""
        return cls((0,) * degree + (c,))

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def eval(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other):
        return isinstance(other, UniPoly) and other.coeffs == self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            elif d == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{d}" if mag == 1 else f"{mag}*x^{d}"
            parts.append(("-" if c < 0 else "+", body))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


_FALLING = {0: UniPoly.one()}


def falling_factorial(j: int) -> UniPoly:
    """(x)_j = x (x-1) ... (x-j+1) as an exact polynomial; (x)_0 = 1."""
    if j < 0:
        raise InputError("falling factorial index must be nonnegative")
    if j not in _FALLING:
        prev = falling_factorial(j - 1)
        _FALLING[j] = prev * UniPoly((-(j - 1), 1))
    return _FALLING[j]


# ---------------------------------------------------------------------------
# coefficient extraction and transform


def coeff_of_product_with_linear_power(p: MultiPoly, target) -> int:
    """Coefficient of x^target in p * (x_1+...+x_n)^(sum(target) - deg p).

    Never expands the linear power: each sparse term of p contributes its
    coefficient times one multinomial coefficient.  Terms of total degree
    below deg p cannot reach the target and drop out automatically.
    """
    target = tuple(target)
    if len(target) != p.nvars or any(t < 0 for t in target):
        raise InputError(f"bad target exponent vector {target!r}")
    m = sum(target) - p.total_degree()
    if m < 0:
        raise InputError("target total degree is below the polynomial degree")
    total = 0
    for exps, c in p.terms.items():
        rest = [t - e for t, e in zip(target, exps)]
        if min(rest) < 0 or sum(rest) != m:
            continue
        total += c * _multinomial(m, rest)
    return total


def path_polynomial(n: int) -> MultiPoly:
    """(x_1-x_2)(x_2-x_3)...(x_{n-1}-x_n), the adjacent-difference product."""
    if n < 2:
        raise InputError("path polynomial needs n >= 2")
    out = MultiPoly.constant(1, n)
    for i in range(n - 1):
        out = out * (MultiPoly.variable(i, n) - MultiPoly.variable(i + 1, n))
    return out


def cycle_polynomial(n: int) -> MultiPoly:
    """The path product times the wrap-around factor (x_n - x_1)."""
    if n < 2:
        raise InputError("cycle polynomial needs n >= 2")
    return path_polynomial(n) * (MultiPoly.variable(n - 1, n) - MultiPoly.variable(0, n))


def falling_factorial_transform(p: MultiPoly) -> UniPoly:
    """Send each monomial x_1^{j_1}...x_n^{j_n} to (x)_{j_1}...(x)_{j_n}.

    Defined for homogeneous polynomials only; rejecting mixed degrees keeps
    the extraction identity's precondition explicit.
    """
    if not p.is_homogeneous():
        raise InputError("transform requires a homogeneous polynomial")
    out = UniPoly.zero()
    for exps, c in p.terms.items():
        f = UniPoly.one()
        for j in exps:
            if j:
                f = f * falling_factorial(j)
        out = out + c * f
    return out


def transform_identity_holds(p: MultiPoly, k: int) -> bool:
    """Check the central-coefficient identity at k, both sides independent.

    Left: the coefficient of x_1^k...x_n^k in p * (sum x_i)^(kn - deg p),
    by sparse extraction.  Right: (kn - deg p)! / (k!)^n times the
    falling-factorial transform of p evaluated at k, as an exact fraction.
    """
    if k < 1:
        raise InputError("k must be a positive integer")
    m = p.total_degree()
    n = p.nvars
    if m > k * n:
        raise InputError("polynomial degree exceeds k * nvars")
    lhs = coeff_of_product_with_linear_power(p, (k,) * n)
    scale = Fraction(math.factorial(k * n - m), math.factorial(k) ** n)
    rhs = scale * falling_factorial_transform(p).eval(k)
    return rhs == lhs


def cycle_path_recursion_holds(n: int) -> bool:
    """Check T(cycle_{n+1}) = x*T(path_n) + x^2*T(path_{n-2}) for odd n >= 5.

    T is the falling-factorial transform; all three polynomials are expanded
    and transformed independently, so the check has no shared shortcut.
    """
    if n < 5 or n % 2 == 0:
        raise InputError("recursion check needs odd n >= 5")
    lhs = falling_factorial_transform(cycle_polynomial(n + 1))
    x = UniPoly((0, 1))
    x2 = UniPoly((0, 0, 1))
    rhs = (x * falling_factorial_transform(path_polynomial(n))
           + x2 * falling_factorial_transform(path_polynomial(n - 2)))
    return lhs == rhs


# ---------------------------------------------------------------------------
# closed-form coefficients


def _exact_int(f: Fraction) -> int:
    if f.denominator != 1:
        raise AssertionError(f"closed form is not integral: {f}")
    return f.numerator


def path3_coefficient(k1: int, k2: int, k3: int) -> int:
    """Coefficient of x1^k1 x2^k2 x3^k3 in (x1-x2)(x2-x3)(x1+x2+x3)^(k1+k2+k3-2).

    Closed form: (k1+k2+k3-2)! / (k1! k2! k3!) * (k2 + (k2-k1)(k3-k2)).
    """
    if min(k1, k2, k3) < 1:
        raise InputError("exponents must be positive")
    num = Fraction(math.factorial(k1 + k2 + k3 - 2),
                   math.factorial(k1) * math.factorial(k2) * math.factorial(k3))
    return _exact_int(num * (k2 + (k2 - k1) * (k3 - k2)))


def even_cycle_coefficient(n: int, k: int) -> int:
    """Central coefficient for the n-cycle product, n even:

    [x_1^k...x_n^k] cycle_n * (sum x_i)^((k-1)n) = ((k-1)n)! / (k!)^n * 2k^(n/2).
    """
    if n < 2 or n % 2:
        raise InputError("n must be even and >= 2")
    if k < 1:
        raise InputError("k must be positive")
    scale = Fraction(math.factorial((k - 1) * n), math.factorial(k) ** n)
    return _exact_int(scale * 2 * k ** (n // 2))


def odd_path_coefficient(n: int, k: int) -> int:
    """Central coefficient for the n-path product, n odd:

    [x_1^k...x_n^k] path_n * (sum x_i)^((k-1)n+1) = ((k-1)n+1)!/(k!)^n * k^((n-1)/2).
    """
    if n < 3 or n % 2 == 0:
        raise InputError("n must be odd and >= 3")
    if k < 1:
        raise InputError("k must be positive")
    scale = Fraction(math.factorial((k - 1) * n + 1), math.factorial(k) ** n)
    return _exact_int(scale * k ** ((n - 1) // 2))


# ---------------------------------------------------------------------------
# nonvanishing certificates


@dataclass(frozen=True)
class CoeffCertificate:
    """Outcome of a polynomial-method lower-bound certification.

    ``coefficient`` is the exact central coefficient h over Z; ``residue``
    is h reduced mod the torsion bound (h itself in characteristic 0).  The
    ``bound`` sum(|A_i| - 1) - deg p + 1 is certified only when the residue
    is nonzero.
    """

    coefficient: int
    residue: int
    bound: int
    certified: bool


def certified_lower_bound(p: MultiPoly, sizes, torsion=math.inf) -> CoeffCertificate:
    """Certify |{a_1+...+a_n : a_i in A_i, p(a) != 0}| >= sum(|A_i|-1) - deg p + 1.

    The certificate is the nonvanishing, modulo the torsion bound when it is
    finite, of the coefficient of x_1^{|A_1|-1}...x_n^{|A_n|-1} in
    p * (x_1+...+x_n)^(sum(|A_i|-1) - deg p).
    """
    sizes = tuple(sizes)
    if len(sizes) != p.nvars or any(s < 1 for s in sizes):
        raise InputError(f"bad size vector {sizes!r}")
    target = tuple(s - 1 for s in sizes)
    slack = sum(target) - p.total_degree()
    if slack < 0:
        raise InputError("polynomial degree exceeds sum(|A_i| - 1)")
    h = coeff_of_product_with_linear_power(p, target)
    residue = h % torsion if torsion != math.inf else h
    return CoeffCertificate(
        coefficient=h,
        residue=residue,
        bound=sum(target) - p.total_degree() + 1,
        certified=residue != 0,
    )
