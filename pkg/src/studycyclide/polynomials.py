"""Bihomogeneous forms on P1 x P1 and binary-form root utilities.

A form of bidegree (m, n) is stored as an (m+1) x (n+1) coefficient grid:
``grid[i][j]`` multiplies ``s0**(m-i) * s1**i * t0**(n-j) * t1**j``.
Binary forms (single P1) are coefficient lists ``c[0..d]`` for
``sum(c[i] * u0**(d-i) * u1**i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BidegreeForm:
    grid: tuple

    @staticmethod
    def from_rows(rows):
        return BidegreeForm(tuple(tuple(r) for r in rows))

    @staticmethod
    def zero(deg_s: int, deg_t: int, scalar=Fraction(0)):
        return BidegreeForm(tuple(tuple(scalar for _ in range(deg_t + 1))
                                  for _ in range(deg_s + 1)))

    @property
    def deg_s(self) -> int:
        return len(self.grid) - 1

    @property
    def deg_t(self) -> int:
        return len(self.grid[0]) - 1

    def __add__(self, other):
        return BidegreeForm(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.grid, other.grid)))

    def __sub__(self, other):
        return BidegreeForm(tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.grid, other.grid)))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        return BidegreeForm(tuple(tuple(k * v for v in row) for row in self.grid))

    def __mul__(self, other):
        ds, dt = self.deg_s + other.deg_s, self.deg_t + other.deg_t
        zero = 0 * self.grid[0][0]
        out = [[zero for _ in range(dt + 1)] for _ in range(ds + 1)]
        for i, row in enumerate(self.grid):
            for j, a in enumerate(row):
                if a == 0:
                    continue
                for k, orow in enumerate(other.grid):
                    for l, b in enumerate(orow):
                        if b != 0:
                            out[i + k][j + l] += a * b
        return BidegreeForm.from_rows(out)

    def evaluate(self, s, t):
        """Evaluate at s = (s0, s1), t = (t0, t1)."""
        s0, s1 = s
        t0, t1 = t
        ms = [s0 ** (self.deg_s - i) * s1 ** i for i in range(self.deg_s + 1)]
        mt = [t0 ** (self.deg_t - j) * t1 ** j for j in range(self.deg_t + 1)]
        total = 0 * s0
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c != 0:
                    total += c * ms[i] * mt[j]
        return total

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.grid for v in row)

    def coefficients(self):
        return [v for row in self.grid for v in row]

    def t_quadratic_in(self):
        """For a (2,2) form, the three s-binary-forms (A, B, C) with
        value = A(s) t0^2 + B(s) t0 t1 + C(s) t1^2."""
        return ([row[0] for row in self.grid],
                [row[1] for row in self.grid],
                [row[2] for row in self.grid])

    def freeze_t(self, t):
        """Binary form in s obtained by substituting t = (t0, t1)."""
        t0, t1 = t
        mt = [t0 ** (self.deg_t - j) * t1 ** j for j in range(self.deg_t + 1)]
        return [sum(c * m for c, m in zip(row, mt)) for row in self.grid]

    def freeze_s(self, s):
        """Binary form in t obtained by substituting s = (s0, s1)."""
        s0, s1 = s
        ms = [s0 ** (self.deg_s - i) * s1 ** i for i in range(self.deg_s + 1)]
        return [sum(self.grid[i][j] * ms[i] for i in range(self.deg_s + 1))
                for j in range(self.deg_t + 1)]


def bilinear_pair_product(coeff_dot):
    """Biquadratic grid of <a(s,t), b(s,t)> from the 4x4 dot table.

    ``coeff_dot[(i, j), (k, l)]`` is the scalar product of the (i,j) and
    (k,l) bilinear coefficients; monomial (i,j)*(k,l) lands at grid slot
    (i+k, j+l).
    """
    out = [[Fraction(0)] * 3 for _ in range(3)]
    for (i, j), inner in coeff_dot.items():
        for (k, l), val in inner.items():
            out[i + k][j + l] += val
    return BidegreeForm.from_rows(out)


# --- binary forms -----------------------------------------------------------

def binary_degree(coeffs) -> int:
    return len(coeffs) - 1


def binary_is_zero(coeffs) -> bool:
    return all(c == 0 for c in coeffs)


def binary_eval(coeffs, u) -> Fraction:
    u0, u1 = u
    d = binary_degree(coeffs)
    return sum(c * u0 ** (d - i) * u1 ** i for i, c in enumerate(coeffs))


def binary_derivative(coeffs):
    """Derivative with respect to the affine chart variable u1/u0."""
    d = binary_degree(coeffs)
    return [coeffs[i + 1] * (i + 1) for i in range(d)] or [Fraction(0)]


def _univariate(coeffs):
    """Affine-chart polynomial (low-to-high in u = u1/u0) plus the
    multiplicity of the root at (0:1)."""
    d = binary_degree(coeffs)
    poly = list(coeffs)
    inf_mult = 0
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
        inf_mult += 1
    return poly, inf_mult, d


def _poly_mod(a, b):
    """Remainder of univariate division, coefficients low-to-high."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    if b == [Fraction(0)]:
        raise ZeroDivisionError("polynomial mod by zero")
    while len(a) >= len(b) and a != [Fraction(0)]:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if all(c == 0 for c in a):
            return [Fraction(0)]
    return a


def poly_gcd(a, b):
    """Monic univariate gcd, coefficients low-to-high."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while not all(c == 0 for c in b):
        a, b = b, _poly_mod(a, b)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    if a[-1] != 0 and a != [Fraction(0)]:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def rational_roots(poly):
    """All rational roots (with multiplicity stripped) of a univariate
    polynomial with Fraction coefficients, low-to-high order."""
    poly = list(poly)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    if all(c == 0 for c in poly):
        raise ValueError("zero polynomial has every root")
    roots = []
    # factor out u = 0
    while poly[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        poly = poly[1:]
    if len(poly) == 1:
        return roots
    # integer-scale, then rational root theorem
    from math import gcd as igcd

    den = 1
    for c in poly:
        den = den * c.denominator // igcd(den, c.denominator)
    ipoly = [int(c * den) for c in poly]
    g = 0
    for c in ipoly:
        g = igcd(g, c)
    if g > 1:
        ipoly = [c // g for c in ipoly]
    a0, an = abs(ipoly[0]), abs(ipoly[-1])

    def divisors(n):
        out = []
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.append(i)
                if i != n // i:
                    out.append(n // i)
            i += 1
        return out

    seen = set()
    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if sum(c * cand ** i for i, c in enumerate(ipoly)) == 0:
                    roots.append(cand)
    return roots


def binary_common_roots(forms):
    """Common projective rational roots of a family of binary forms.

    Returns canonical pairs: chart roots as (1, r) and, when shared, the
    point at infinity (0, 1).
    """
    nonzero = [f for f in forms if not binary_is_zero(f)]
    if not nonzero:
        raise ValueError("all forms vanish identically")
    gcd_poly = None
    inf_common = None
    for f in nonzero:
        poly, inf_mult, _ = _univariate(f)
        gcd_poly = poly if gcd_poly is None else poly_gcd(gcd_poly, poly)
        inf_common = inf_mult if inf_common is None else min(inf_common, inf_mult)
    roots = []
    if not all(c == 0 for c in gcd_poly) and len(gcd_poly) > 1:
        roots = [(Fraction(1), r) for r in sorted(rational_roots(gcd_poly))]
    if inf_common and inf_common > 0:
        roots.append((Fraction(0), Fraction(1)))
    return roots


def binary_multiple_roots(coeffs):
    """Rational double (or higher) roots of one binary form."""
    poly, inf_mult, d = _univariate(coeffs)
    if all(c == 0 for c in poly):
        raise ValueError("zero form")
    roots = []
    if len(poly) > 1:
        g = poly_gcd(poly, binary_derivative(poly))
        if len(g) > 1:
            roots = [(Fraction(1), r) for r in sorted(rational_roots(g))]
    if inf_mult >= 2:
        roots.append((Fraction(0), Fraction(1)))
    return roots
