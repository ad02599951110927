"""Darboux cyclides as biquadratic images: numerical implicitization via the
pencil of quadrics through the image, the two parameter circle families,
generic intersection counts, and co-sphericity of circles.

Implicitization builds the 15-column second-Veronese sample matrix of image
points; a genuine cyclide leaves a nullspace of dimension exactly 2 (the
Moebius form plus one more quadric).  Spheres and degenerate images fail the
dimension check and are rejected, never silently accepted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (BasepointError, IndeterminateCountError, NotACyclideError,
                     ZeroInputError)
from .moebius import (Circle, MoebiusPoint, circle_through,
                      common_hyperplane_exists, moebius_value,
                      projectively_equal)
from .orbit import BiquadraticMap, eval_biquadratic

# x_i * x_j monomials, i <= j, row-major upper triangle
VERONESE_MONOMIALS = tuple((i, j) for i in range(5) for j in range(i, 5))


@dataclass(frozen=True)
class QuadricForm:
    """Symmetric 5x5 matrix up to scale, as nested tuples."""
    matrix: tuple

    def __post_init__(self):
        if all(v == 0 for row in self.matrix for v in row):
            raise ZeroInputError("zero quadric form")

    @staticmethod
    def from_upper_triangle(vec15):
        """Inverse of to_upper_triangle: off-diagonal entries are halved."""
        m = [[Fraction(0)] * 5 for _ in range(5)]
        exact = all(linalg.is_exact(v) for v in vec15)
        if not exact:
            m = [[0.0] * 5 for _ in range(5)]
        for (i, j), v in zip(VERONESE_MONOMIALS, vec15):
            if i == j:
                m[i][i] = v
            else:
                half = Fraction(v) / 2 if exact else v / 2.0
                m[i][j] = half
                m[j][i] = half
        return QuadricForm(tuple(tuple(row) for row in m))

    def to_upper_triangle(self):
        """Coefficients of the quadratic polynomial, x_i x_j order (i <= j)."""
        out = []
        for i, j in VERONESE_MONOMIALS:
            out.append(self.matrix[i][i] if i == j else 2 * self.matrix[i][j])
        return out

    def value(self, x):
        total = 0 * x[0] * x[0]
        for i in range(5):
            row = self.matrix[i]
            for j in range(5):
                if row[j] != 0:
                    total += row[j] * x[i] * x[j]
        return total

    def bilinear(self, x, y):
        total = 0 * x[0] * y[0]
        for i in range(5):
            row = self.matrix[i]
            for j in range(5):
                if row[j] != 0:
                    total += row[j] * x[i] * y[j]
        return total


MOEBIUS_FORM = QuadricForm.from_upper_triangle(
    [Fraction(1) if (i, j) == (0, 4) else
     Fraction(-1) if (i, j) in ((1, 1), (2, 2), (3, 3)) else Fraction(0)
     for i, j in VERONESE_MONOMIALS])

MOEBIUS_VEC15 = tuple(MOEBIUS_FORM.to_upper_triangle())


def veronese(x):
    return [x[i] * x[j] for i, j in VERONESE_MONOMIALS]


def _sample_parameters(count: int, seed: int):
    """Deterministic rational parameter pairs in the affine charts."""
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < count:
        s = (Fraction(1), Fraction(rng.randint(-8, 8), rng.randint(1, 3)))
        t = (Fraction(1), Fraction(rng.randint(-8, 8), rng.randint(1, 3)))
        key = (s[1], t[1])
        if key in seen:
            continue
        seen.add(key)
        out.append((s, t))
    return out


@dataclass(frozen=True)
class Cyclide:
    """Implicitized biquadratic image: the parametrization plus the pencil
    of quadrics (Moebius form first) vanishing on it."""
    param: BiquadraticMap
    pencil: tuple


def implicitize(x: BiquadraticMap, sample_count: int = 40, seed: int = 11,
                tol: float | None = None) -> Cyclide:
    """Certify the image as a cyclide and return its quadric pencil.

    Raises NotACyclideError when the space of quadrics through the sampled
    image does not have dimension exactly 2 (spheres give more, honest
    degree-8 images give less).
    """
    if sample_count < 40:
        raise ValueError("sample_count must be at least 40")
    rows = []
    for s, t in _sample_parameters(sample_count, seed):
        try:
            pt = eval_biquadratic(x, s, t)
        except BasepointError:
            continue
        rows.append(veronese(pt.normalized()))
    if len(rows) < 30:
        raise NotACyclideError("too many basepoint samples; invalid map")
    basis = linalg.nullspace(rows, tol)
    if len(basis) != 2:
        raise NotACyclideError(
            f"pencil dimension {len(basis)} != 2; image is not a cyclide")
    stacked = [list(MOEBIUS_VEC15)] + [list(v) for v in basis]
    if linalg.rank(stacked, tol) != 2:
        raise NotACyclideError("Moebius form missing from the pencil")
    second = None
    for vec in basis:
        if linalg.rank([list(MOEBIUS_VEC15), list(vec)], tol) == 2:
            second = list(vec)
            break
    # canonical representative: reduce against the Moebius form and rescale
    moeb = list(MOEBIUS_VEC15)
    if tol is None and all(linalg.is_exact(v) for v in second):
        idx = moeb.index(Fraction(1))  # the x0*x4 slot
        second = [v - second[idx] * m for v, m in zip(second, moeb)]
        lead = next(v for v in second if v != 0)
        second = [v / lead for v in second]
    cyclide = Cyclide(x, (MOEBIUS_FORM, QuadricForm.from_upper_triangle(second)))
    return cyclide


def contains_point(d: Cyclide, x: MoebiusPoint, tol: float | None = None) -> bool:
    for form in d.pencil:
        val = form.value(x.coords)
        if tol is None and linalg.is_exact(val):
            if val != 0:
                return False
        else:
            scale = max(abs(float(c)) for c in x.coords) ** 2
            fmax = max(abs(float(v)) for row in form.matrix for v in row)
            if abs(float(val)) > (tol or linalg.RANK_GAP) * max(scale * fmax, 1e-300):
                return False
    return True


def pencil_residual(d: Cyclide, sample_count: int = 100, seed: int = 97) -> float:
    """Max absolute normalized residual of both pencil forms on fresh samples."""
    worst = 0.0
    for s, t in _sample_parameters(sample_count, seed):
        try:
            pt = eval_biquadratic(d.param, s, t)
        except BasepointError:
            continue
        xn = pt.normalized()
        for form in d.pencil:
            val = form.value(xn)
            worst = max(worst, abs(float(val)))
    return worst


@dataclass(frozen=True)
class CircleFamily:
    """One of the two parameter families of circles on a cyclide: the curves
    with the s coordinate (axis "s") or the t coordinate (axis "t") frozen."""
    axis: str
    parent: Cyclide

    def __post_init__(self):
        if self.axis not in ("s", "t"):
            raise ValueError("axis must be 's' or 't'")


def families(d: Cyclide):
    return CircleFamily("s", d), CircleFamily("t", d)


FAMILY_SAMPLE_PARAMS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2),
                        Fraction(1, 2), Fraction(-2), Fraction(3), Fraction(1, 3))

# ten fixed probe parameters for generic members
GENERIC_PROBES = ((Fraction(1), Fraction(2)), (Fraction(1), Fraction(3)),
                  (Fraction(2), Fraction(1)), (Fraction(1), Fraction(-2)),
                  (Fraction(3), Fraction(1)), (Fraction(1), Fraction(5)),
                  (Fraction(2), Fraction(3)), (Fraction(1), Fraction(-3)),
                  (Fraction(5), Fraction(2)), (Fraction(3), Fraction(4)))


def family_member(family: CircleFamily, param, tol: float | None = None):
    """The parameter circle at the frozen coordinate; a MoebiusPoint when the
    section collapses."""
    x = family.parent.param
    samples = []
    for lam in FAMILY_SAMPLE_PARAMS:
        other = (Fraction(1), lam)
        s, t = (param, other) if family.axis == "s" else (other, param)
        try:
            samples.append(eval_biquadratic(x, s, t))
        except BasepointError:
            continue
        if len(samples) == 6:
            break
    inf = (Fraction(0), Fraction(1))
    s, t = (param, inf) if family.axis == "s" else (inf, param)
    try:
        samples.append(eval_biquadratic(x, s, t))
    except BasepointError:
        pass
    if len(samples) < 5:
        raise BasepointError("family member meets the base locus everywhere")
    first = samples[0]
    if all(projectively_equal(first.coords, p.coords, tol) for p in samples[1:]):
        return first
    rows = [list(p.coords) for p in samples]
    if linalg.rank(rows, tol) != 3:
        raise NotACyclideError("family member is not a conic")
    tri = [samples[0]]
    for cand in samples[1:]:
        if linalg.rank([list(p.coords) for p in tri] + [list(cand.coords)], tol) == len(tri) + 1:
            tri.append(cand)
        if len(tri) == 3:
            break
    return circle_through(*tri, tol=tol)


def circle_common_points(c1: Circle, c2: Circle, tol: float | None = None):
    """Real common points of two circles, as MoebiusPoints.

    The planes meet in a point (count it if it is on the quadric) or in a
    line (restrict the Moebius form to the line and take its real roots).
    """
    stacked = [list(f) for f in c1.plane] + [list(f) for f in c2.plane]
    meet = linalg.nullspace(stacked, tol)
    if not meet:
        return []
    if len(meet) == 1:
        x = tuple(meet[0])
        val = moebius_value(x)
        if tol is None and all(linalg.is_exact(c) for c in x):
            return [MoebiusPoint(x)] if val == 0 else []
        scale = max(abs(float(c)) for c in x) ** 2
        ok = abs(float(val)) <= (tol or linalg.RANK_GAP) * max(scale, 1.0)
        return [MoebiusPoint(x)] if ok else []
    if len(meet) == 2:
        pts = _quadric_points_on_line(meet[0], meet[1], tol)
        out = []
        for p in pts:
            if not any(projectively_equal(p.coords, q.coords, tol) for q in out):
                out.append(p)
        return out
    raise IndeterminateCountError("circle planes coincide")


def _quadric_points_on_line(u, w, tol: float | None = None):
    """Real points of the Moebius quadric on the line spanned by u and w:
    roots of A*l^2 + B*l*m + C*m^2 with A = Q(u), B = 2*B(u,w), C = Q(w)."""
    from .moebius import moebius_bilinear

    a = moebius_value(u)
    b = 2 * moebius_bilinear(u, w)
    c = moebius_value(w)
    exact = all(linalg.is_exact(v) for v in (a, b, c))

    def point(lam, mu):
        return MoebiusPoint(tuple(lam * ui + mu * wi for ui, wi in zip(u, w)))

    if a == 0 and b == 0 and c == 0:
        raise IndeterminateCountError("line lies on the quadric")
    if a == 0:
        if b == 0:
            return [point(1, 0)]    # double root at u
        return [point(1, 0), point(-c, b)]
    disc = b * b - 4 * a * c
    if exact:
        if disc < 0:
            return []
        if disc == 0:
            return [point(-b, 2 * a)]
        from math import isqrt

        frac = Fraction(disc)
        nd = frac.numerator * frac.denominator
        r = isqrt(nd)
        if r * r == nd:
            root = Fraction(r, frac.denominator)
        else:
            root = float(frac) ** 0.5   # real but irrational: float points
            a, b = float(a), float(b)
        return [point(-b + root, 2 * a), point(-b - root, 2 * a)]
    scale = max(abs(float(b)) ** 2, abs(float(4 * a * c)), 1.0)
    eps = (tol or linalg.RANK_GAP) * scale
    if disc < -eps:
        return []
    if abs(disc) <= eps:
        return [point(-b, 2 * a)]
    root = float(disc) ** 0.5
    return [point(-b + root, 2 * a), point(-b - root, 2 * a)]


def family_intersection(f1: CircleFamily, f2: CircleFamily,
                        tol: float | None = None) -> int:
    """Generic intersection count of members from two families.

    Draws members at fixed probe parameters and counts real common points;
    probe pairs must agree or the count is reported as indeterminate.
    """
    if f1.parent is not f2.parent and f1.parent != f2.parent:
        raise ValueError("families must share a parent cyclide")
    counts = set()
    probes = 0
    for i, pa in enumerate(GENERIC_PROBES):
        for j, pb in enumerate(GENERIC_PROBES):
            if f1.axis == f2.axis and i == j:
                continue
            if probes >= 10:
                break
            m1 = family_member(f1, pa, tol)
            m2 = family_member(f2, pb, tol)
            if not isinstance(m1, Circle) or not isinstance(m2, Circle):
                continue
            if circles_equal_safe(m1, m2, tol):
                continue
            counts.add(len(circle_common_points(m1, m2, tol)))
            probes += 1
        if probes >= 10:
            break
    if probes == 0:
        raise IndeterminateCountError("no valid probe pairs")
    if len(counts) != 1:
        raise IndeterminateCountError(f"probe pairs disagree: {sorted(counts)}")
    return counts.pop()


def circles_equal_safe(c1: Circle, c2: Circle, tol: float | None = None) -> bool:
    stacked = [list(f) for f in c1.plane] + [list(f) for f in c2.plane]
    return linalg.rank(stacked, tol) == 2


def cospherical(c1: Circle, c2: Circle, tol: float | None = None) -> bool:
    """Two distinct circles lying in a common hyperplane section (a sphere)."""
    if circles_equal_safe(c1, c2, tol):
        raise ValueError("cospherical test requires distinct circles")
    return common_hyperplane_exists(c1, c2, tol)
