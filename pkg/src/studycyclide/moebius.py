"""The Moebius quadric x0*x4 = x1^2 + x2^2 + x3^2 in P4, stereographic
projection, and circles as irreducible plane sections.

Circles are stored projectively (a 2-plane given by two linear forms plus
three witness points); Euclidean center/normal/radius data is a derived
view.  That keeps circles through the projection center first-class: their
stereographic image is a line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (CenterChartError, CenterOfProjectionError,
                     CollinearWitnessesError, ReducibleSectionError,
                     ZeroInputError)


def _exact_tuple(x) -> bool:
    return all(linalg.is_exact(c) for c in x)


def _coerce(x):
    """Fractions for exact tuples, floats otherwise; keeps division safe."""
    if _exact_tuple(x):
        return tuple(Fraction(c) for c in x)
    return tuple(float(c) for c in x)


def moebius_value(x):
    return x[0] * x[4] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3]


def moebius_bilinear(x, y):
    half = Fraction(1, 2) if _exact_tuple(x) and _exact_tuple(y) else 0.5
    return half * (x[0] * y[4] + x[4] * y[0]) \
        - x[1] * y[1] - x[2] * y[2] - x[3] * y[3]


@dataclass(frozen=True)
class MoebiusPoint:
    coords: tuple

    def __post_init__(self):
        if all(c == 0 for c in self.coords):
            raise ZeroInputError("projective point cannot be all zero")

    @staticmethod
    def of(*coords):
        return MoebiusPoint(tuple(coords))

    def on_quadric(self, tol: float | None = None) -> bool:
        return on_moebius_quadric(self.coords, tol)

    def normalized(self):
        """Scale so the first nonzero coordinate is 1 (canonical form)."""
        coords = _coerce(self.coords)
        for c in coords:
            if c != 0:
                return tuple(v / c for v in coords)
        raise ZeroInputError("zero point")


ORIGIN = MoebiusPoint.of(Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0))
PROJECTION_CENTER = MoebiusPoint.of(Fraction(0), Fraction(0), Fraction(0), Fraction(0), Fraction(1))


def on_moebius_quadric(x, tol: float | None = None) -> bool:
    if all(c == 0 for c in x):
        raise ZeroInputError("zero tuple")
    val = moebius_value(x)
    if tol is None and all(linalg.is_exact(c) for c in x):
        return val == 0
    scale = max(abs(float(c)) for c in x) ** 2
    return abs(float(val)) <= (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)


def projectively_equal(x, y, tol: float | None = None) -> bool:
    """Equality of projective points given as coordinate tuples."""
    rows = [list(x), list(y)]
    return linalg.rank(rows, tol) == 1


def stereo_project(x: MoebiusPoint):
    """Drop the last coordinate; undefined at the projection center."""
    if projectively_equal(x.coords, PROJECTION_CENTER.coords):
        raise CenterOfProjectionError("stereographic projection undefined here")
    return x.coords[:4]


def stereo_lift(v) -> MoebiusPoint:
    """Inverse stereographic projection of an affine 3-space point."""
    one = 1 if linalg.is_exact(v[0]) else 1.0
    return MoebiusPoint.of(one, v[0], v[1], v[2],
                           v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def chart_point(x: MoebiusPoint):
    """Affine 3-space coordinates of the stereographic image."""
    if x.coords[0] == 0:
        raise CenterChartError("point has x0 = 0; no affine chart image")
    c = _coerce(x.coords)
    return (c[1] / c[0], c[2] / c[0], c[3] / c[0])


@dataclass(frozen=True)
class Circle:
    """Irreducible conic on the Moebius quadric: a 2-plane section.

    plane: two independent linear forms (5-tuples) cutting the 2-plane;
    witnesses: three distinct points on the circle.
    """
    plane: tuple
    witnesses: tuple

    def contains(self, x: MoebiusPoint, tol: float | None = None) -> bool:
        for form in self.plane:
            val = sum(f * c for f, c in zip(form, x.coords))
            if tol is None and linalg.is_exact(val):
                if val != 0:
                    return False
            else:
                scale = max(abs(float(c)) for c in x.coords)
                fmax = max(abs(float(f)) for f in form)
                if abs(float(val)) > (tol or linalg.RANK_GAP) * max(scale * fmax, 1e-300):
                    return False
        return True

    def through_origin(self, tol: float | None = None) -> bool:
        return self.contains(ORIGIN, tol)

    def through_projection_center(self, tol: float | None = None) -> bool:
        return self.contains(PROJECTION_CENTER, tol)

    def spanning_points(self, tol: float | None = None):
        """Three rows spanning the 2-plane (nullspace of the two forms)."""
        basis = linalg.nullspace([list(f) for f in self.plane], tol)
        if len(basis) != 3:
            raise ReducibleSectionError("plane forms do not cut a 2-plane")
        return basis


def circles_equal(c1: Circle, c2: Circle, tol: float | None = None) -> bool:
    """Circles coincide iff their 2-planes coincide."""
    stacked = [list(f) for f in c1.plane] + [list(f) for f in c2.plane]
    return linalg.rank(stacked, tol) == 2


def restricted_conic_matrix(circle: Circle, tol: float | None = None):
    """Moebius form restricted to the circle's plane, as a 3x3 matrix."""
    pts = circle.spanning_points(tol)
    return [[moebius_bilinear(pi, pj) for pj in pts] for pi in pts]


def circle_through(a: MoebiusPoint, b: MoebiusPoint, c: MoebiusPoint,
                   tol: float | None = None) -> Circle:
    """The unique circle through three quadric points in general position."""
    rows = [list(a.coords), list(b.coords), list(c.coords)]
    if linalg.rank(rows, tol) != 3:
        raise CollinearWitnessesError("witnesses do not span a 2-plane")
    forms = linalg.nullspace(rows, tol)
    if len(forms) != 2:
        raise CollinearWitnessesError("witnesses do not cut out a 2-plane")
    circle = Circle(tuple(tuple(f) for f in forms), (a, b, c))
    if linalg.rank(restricted_conic_matrix(circle, tol), tol) != 3:
        raise ReducibleSectionError("plane section is a line pair, not a circle")
    return circle


@dataclass(frozen=True)
class EuclideanCircle:
    center: tuple
    normal: tuple
    radius: float


@dataclass(frozen=True)
class EuclideanLine:
    point: tuple
    direction: tuple


def _canonical_direction(d):
    """Flip sign so the first nonzero component is positive."""
    for comp in d:
        if comp != 0:
            return tuple(x if comp > 0 else -x for x in d)
    raise ZeroInputError("zero direction")


def circle_chart_data(circle: Circle, tol: float | None = None):
    """Exact chart description of the stereographic image.

    Returns ("circle", center, normal_direction, radius_squared) with rational
    data for rational planes, or ("line", point, direction) when the plane
    passes through the projection center.  The normal direction is canonical
    but not normalized, so exact arithmetic survives.
    """
    f, g = _coerce(circle.plane[0]), _coerce(circle.plane[1])
    if f[4] == 0 and g[4] == 0:
        # both chart equations are planes: the image is their line
        rows = [[f[1], f[2], f[3]], [g[1], g[2], g[3]]]
        dirs = linalg.nullspace(rows, tol)
        if len(dirs) != 1:
            raise ReducibleSectionError("degenerate line section")
        direction = _canonical_direction(tuple(dirs[0]))
        if _exact_tuple(f) and _exact_tuple(g):
            point = linalg.solve_linear(rows, [-f[0], -g[0]])
        else:
            point = _lstsq_point(rows, [-f[0], -g[0]])
        return ("line", tuple(point), direction)
    if f[4] == 0:
        f, g = g, f
    # f is a genuine sphere equation: f4*|v|^2 + f.(v) + f0 = 0
    lam = g[4] / f[4]
    pf = [g[i] - lam * f[i] for i in range(5)]  # plane: pf0 + pf.v = 0
    u = (pf[1], pf[2], pf[3])
    uu = u[0] * u[0] + u[1] * u[1] + u[2] * u[2]
    if uu == 0:
        raise ReducibleSectionError("degenerate pencil; no chart plane")
    cf = tuple(-f[i] / (2 * f[4]) for i in (1, 2, 3))
    rf2 = (f[1] * f[1] + f[2] * f[2] + f[3] * f[3]) / (4 * f[4] * f[4]) - f[0] / f[4]
    h = (u[0] * cf[0] + u[1] * cf[1] + u[2] * cf[2] + pf[0]) / uu
    center = tuple(cf[i] - h * u[i] for i in range(3))
    r2 = rf2 - h * h * uu
    return ("circle", center, _canonical_direction(u), r2)


def _lstsq_point(rows, rhs):
    import numpy as np

    sol, *_ = np.linalg.lstsq(np.array(rows, dtype=float),
                              np.array(rhs, dtype=float), rcond=None)
    return tuple(float(v) for v in sol)


def euclidean_view(circle: Circle, tol: float | None = None):
    """Euclidean center/normal/radius of the stereographic image, or the
    line variant for circles through the projection center."""
    data = circle_chart_data(circle, tol)
    if data[0] == "line":
        _, point, direction = data
        n = math.sqrt(sum(float(d) ** 2 for d in direction))
        return EuclideanLine(tuple(float(p) for p in point),
                             tuple(float(d) / n for d in direction))
    _, center, ndir, r2 = data
    n = math.sqrt(sum(float(d) ** 2 for d in ndir))
    if float(r2) <= 0:
        raise ReducibleSectionError("section has no real circle points")
    return EuclideanCircle(tuple(float(c) for c in center),
                           tuple(float(d) / n for d in ndir),
                           math.sqrt(float(r2)))


def circle_from_euclidean(view) -> Circle:
    """Lift Euclidean circle (or line) data back to a quadric section."""
    if isinstance(view, EuclideanLine):
        a = stereo_lift(view.point)
        b = stereo_lift(tuple(p + d for p, d in zip(view.point, view.direction)))
        rows = [list(a.coords), list(b.coords), list(PROJECTION_CENTER.coords)]
        tol = None if linalg.matrix_is_exact(rows) else linalg.RANK_GAP
        forms = linalg.nullspace(rows, tol)
        if len(forms) != 2:
            raise CollinearWitnessesError("degenerate line lift")
        return Circle(tuple(tuple(f) for f in forms),
                      (a, b, MoebiusPoint(tuple(PROJECTION_CENTER.coords))))
    m, n, r = view.center, view.normal, view.radius
    if r <= 0:
        raise ZeroInputError("radius must be positive")
    # orthonormal frame (u, w) perpendicular to n
    n = tuple(float(v) for v in n)
    axis = min(range(3), key=lambda i: abs(n[i]))
    e = [0.0, 0.0, 0.0]
    e[axis] = 1.0
    u = (n[1] * e[2] - n[2] * e[1], n[2] * e[0] - n[0] * e[2], n[0] * e[1] - n[1] * e[0])
    nu = math.sqrt(sum(v * v for v in u))
    u = tuple(v / nu for v in u)
    w = (n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0])
    pts = []
    for ang in (0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0):
        pt = tuple(float(m[i]) + r * (math.cos(ang) * u[i] + math.sin(ang) * w[i])
                   for i in range(3))
        pts.append(stereo_lift(pt))
    return circle_through(*pts, tol=linalg.RANK_GAP)


def common_hyperplane_exists(c1: Circle, c2: Circle, tol: float | None = None) -> bool:
    """Do both 2-planes lie in one hyperplane of P4?"""
    rows = c1.spanning_points(tol) + c2.spanning_points(tol)
    return linalg.rank(rows, tol) <= 4
