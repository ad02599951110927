"""Reconstruction of the unique ruled quadric surface in the Study quadric
whose orbit is a given cyclide, from two of the cyclide's circle families.

The construction, executable end to end:

1. locate the parameter pair where the biquadratic map hits the origin and
   take the two parameter circles C, C' through it;
2. lift C and C' to lines l, l' through the identity (axis of the circle
   gives the rotation subgroup; line images give translation subgroups);
3. pick a displacement h on l' off the identity and boundary, push the
   base point to p = orbit(h), take the s-family circle C'' through p and
   lift it at p to a line L through the identity;
4. the third line is L*h (right multiplication by h), because
   act(x*h, 0) = act(x, act(h, 0)) identifies the orbit of L*h at the
   origin with the orbit of L at p;
5. span V of the three lines, restrict the Study form, and certify the
   doubly ruled quadric V cut on the Study quadric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import DualQuaternion
from .cyclide import (CircleFamily, Cyclide, contains_point, cospherical,
                      families, family_intersection, family_member)
from .errors import (DegenerateCircleError, DegenerateConfigurationError,
                     CenterChartError, NotDoublyRuledError, OrbitMismatchError)
from .moebius import (MoebiusPoint, ORIGIN, circle_chart_data, projectively_equal)
from .orbit import BilinearMotion, BiquadraticMap, orbit_map, orbit_of_line, orbit_of_motion
from .polynomials import binary_common_roots, binary_multiple_roots
from .study import (IDENTITY, OrbitBase, StudyLine, on_boundary, rotation_line,
                    study_bilinear, translation_line)

ORIGIN_BASE = OrbitBase(ORIGIN)

H_PROBE_PARAMS = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5),
                  Fraction(2, 3), Fraction(3, 4), Fraction(2, 5), Fraction(3, 5))

PENCIL_PROBE_PARAMS = ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)),
                       (Fraction(1), Fraction(-1)), (Fraction(1), Fraction(2)),
                       (Fraction(2), Fraction(1)))


def lift_circle(circle, through: MoebiusPoint, tol: float | None = None) -> StudyLine:
    """The unique rotation (or translation) line through the identity whose
    orbit, based at `through`, is the given circle.

    A circle with Euclidean center m and normal n lifts to the rotation
    subgroup about the axis {m + lambda*n}; a line-image circle lifts to the
    translation subgroup along the line direction.  `through` must lie on
    the circle with a finite chart image.
    """
    if isinstance(circle, MoebiusPoint):
        raise DegenerateCircleError("point orbits have a 2-parameter lift; no unique line")
    if through.coords[0] == 0:
        raise CenterChartError("base point needs a finite chart image")
    if not circle.contains(through, tol):
        raise ValueError("base point must lie on the circle")
    data = circle_chart_data(circle, tol)
    if data[0] == "line":
        _, _, direction = data
        return translation_line(direction)
    _, center, normal_dir, _ = data
    return rotation_line(center, normal_dir)


@dataclass(frozen=True)
class StudyThreeSpace:
    """A 3-space in P7, four spanning rows, with the restricted Study form."""
    basis: tuple

    def __post_init__(self):
        if linalg.rank([list(r) for r in self.basis]) != 4:
            raise DegenerateConfigurationError("basis does not span a 3-space")

    def restricted_study_form(self):
        pts = [DualQuaternion.from_coords(row) for row in self.basis]
        return [[study_bilinear(a, b) for b in pts] for a in pts]

    def to_local(self, coords8):
        """Coordinates with respect to the basis, or None if off the space."""
        cols = [list(r) for r in self.basis]
        sol = linalg.solve_linear(list(map(list, zip(*cols))), list(coords8))
        return sol

    def to_ambient(self, local4):
        out = [0 * Fraction(0)] * 8
        for coef, row in zip(local4, self.basis):
            out = [o + coef * r for o, r in zip(out, row)]
        return tuple(out)

    def contains(self, coords8, tol: float | None = None) -> bool:
        rows = [list(r) for r in self.basis] + [list(coords8)]
        return linalg.rank(rows, tol) == 4


@dataclass(frozen=True)
class RuledQuadric:
    """Intersection of a 3-space with the Study quadric, with certificates.

    seed_lines, when present, are two V-local lines, one per ruling, meeting
    at a point; they make exact (square-root free) ruling extraction possible.
    """
    space: StudyThreeSpace
    form: tuple
    seed_lines: tuple | None = None

    def signature(self, tol: float | None = None):
        return linalg.inertia([list(r) for r in self.form], tol)

    def is_doubly_ruled(self, tol: float | None = None) -> bool:
        pos, neg, zero = self.signature(tol)
        return zero == 0 and {pos, neg} == {2}

    def form_value(self, local4):
        total = 0 * local4[0]
        for i in range(4):
            for j in range(4):
                if self.form[i][j] != 0:
                    total += self.form[i][j] * local4[i] * local4[j]
        return total

    def form_bilinear(self, x, y):
        total = 0 * x[0]
        for i in range(4):
            for j in range(4):
                if self.form[i][j] != 0:
                    total += self.form[i][j] * x[i] * y[j]
        return total


@dataclass(frozen=True)
class LinePencil:
    """One ruling of a doubly ruled quadric, parametrized by the points of a
    base line from the opposite ruling."""
    quadric: RuledQuadric
    base_line: tuple          # two V-local 4-vectors spanning the base line

    def line_at(self, param):
        """The ruling line through base point lam*b1 + mu*b2, as two V-local
        points (the base point and the second tangent direction there)."""
        lam, mu = param
        b1, b2 = self.base_line
        y = tuple(lam * a + mu * b for a, b in zip(b1, b2))
        u = b1 if linalg.rank([list(y), list(b1)]) == 2 else b2
        z = _second_tangent_direction(self.quadric, y, u)
        return (y, z)

    def ambient_line(self, param):
        y, z = self.line_at(param)
        return (self.quadric.space.to_ambient(y), self.quadric.space.to_ambient(z))


def _second_tangent_direction(q: RuledQuadric, y, u):
    """Given y on Q and a known ruling line span(y, u) in Q, the direction of
    the other line through y.  Rational whenever the inputs are."""
    gy = [sum(q.form[i][j] * y[j] for j in range(4)) for i in range(4)]
    tangent = linalg.nullspace([gy])
    w = None
    for cand in tangent:
        if linalg.rank([list(y), list(u), list(cand)]) == 3:
            w = cand
            break
    if w is None:
        raise NotDoublyRuledError("tangent space degenerate")
    quw = q.form_bilinear(u, w)
    qww = q.form_value(w)
    if quw == 0:
        raise NotDoublyRuledError("tangent section is a double line")
    z = tuple(qww * a - 2 * quw * b for a, b in zip(u, w))
    return z


def rulings(q: RuledQuadric, tol: float | None = None):
    """The two pencils of lines covering a doubly ruled quadric.

    Requires seed lines (always present on reconstructed quadrics); without
    them a rational seed is searched by tangent splitting at a small rational
    point of the quadric.
    """
    if not q.is_doubly_ruled(tol):
        raise NotDoublyRuledError(f"signature {q.signature(tol)} is not (2,2)")
    seeds = q.seed_lines
    if seeds is None:
        seeds = _find_seed_lines(q)
    l1, l2 = seeds
    return (LinePencil(q, tuple(map(tuple, l2))),
            LinePencil(q, tuple(map(tuple, l1))))


def _find_seed_lines(q: RuledQuadric):
    """Split the tangent section at a rational quadric point into the two
    lines through it.  Needs the splitting field to be rational."""
    from itertools import product as iproduct
    from math import isqrt

    point = None
    for combo in iproduct((0, 1, -1, 2, -2, 3, -3), repeat=4):
        if all(c == 0 for c in combo):
            continue
        vec = tuple(Fraction(c) for c in combo)
        if q.form_value(vec) == 0:
            point = vec
            break
    if point is None:
        raise NotDoublyRuledError("no small rational point found for seeding")
    gy = [sum(q.form[i][j] * point[j] for j in range(4)) for i in range(4)]
    tangent = linalg.nullspace([gy])
    others = [w for w in tangent
              if linalg.rank([list(point), list(w)]) == 2]
    w1 = None
    w2 = None
    for cand in others:
        if w1 is None:
            w1 = cand
        elif linalg.rank([list(point), list(w1), list(cand)]) == 3:
            w2 = cand
            break
    if w1 is None or w2 is None:
        raise NotDoublyRuledError("tangent space too small")
    a = q.form_value(w1)
    b = 2 * q.form_bilinear(w1, w2)
    c = q.form_value(w2)
    roots = []
    if a == 0:
        roots = [(Fraction(1), Fraction(0))]
        roots.append((-Fraction(c), Fraction(b)) if b != 0 else None)
        roots = [r for r in roots if r is not None]
    else:
        disc = b * b - 4 * a * c
        if disc <= 0:
            raise NotDoublyRuledError("tangent section does not split over R")
        frac = Fraction(disc)
        nd = frac.numerator * frac.denominator
        r = isqrt(nd)
        if r * r != nd:
            raise NotDoublyRuledError("ruling seeds need an irrational field; "
                                      "provide seed lines explicitly")
        root = Fraction(r, frac.denominator)
        roots = [(-b + root, 2 * a), (-b - root, 2 * a)]
    if len(roots) < 2:
        raise NotDoublyRuledError("tangent section does not split")
    dirs = [tuple(lam * x + mu * y for x, y in zip(w1, w2)) for lam, mu in roots]
    return ((point, dirs[0]), (point, dirs[1]))


@dataclass(frozen=True)
class ExclusionCheck:
    """Whether a quadric belongs to the excluded set (inside a 3-space that
    lies in the Study quadric, or inside the orbit map's base locus)."""
    excluded: bool
    reason: str   # "span_inside_study" | "inside_base_locus" | "clear"


def check_excluded(q: RuledQuadric, witnesses=()) -> ExclusionCheck:
    """Excluded iff the restricted Study form vanishes (V inside the quadric)
    or no probed point of Q has a nonzero primal part.  The base locus has no
    real points, so one real witness with p != 0 settles the second test."""
    if all(v == 0 for row in q.form for v in row):
        return ExclusionCheck(True, "span_inside_study")
    probe_points = list(witnesses)
    if q.seed_lines:
        for line in q.seed_lines:
            for pt in line:
                probe_points.append(q.space.to_ambient(pt))
    for coords in probe_points:
        h = DualQuaternion.from_coords(tuple(coords))
        if not h.p.is_zero():
            return ExclusionCheck(False, "clear")
    if not probe_points:
        raise ValueError("no witness points available for the base-locus test")
    return ExclusionCheck(True, "inside_base_locus")


# --- parameter location helpers ---------------------------------------------

def _canonical_param(pair):
    lam, mu = pair
    if lam != 0:
        return (Fraction(1), Fraction(mu) / Fraction(lam))
    return (Fraction(0), Fraction(1))


def _param_sort_key(pair):
    lam, mu = pair
    if lam == 0:
        return (1, Fraction(0))
    return (0, Fraction(mu) / Fraction(lam))


def locate_origin_parameters(x: BiquadraticMap):
    """All parameter pairs where the biquadratic map hits the origin, sorted
    canonically (smallest affine s-chart value first, infinity last).

    Solved through the last coordinate: X4 is a sum of squares, so for each s
    the t-quadratic is positive semidefinite and real zeros sit exactly at
    the double roots of its discriminant.
    """
    a_s, b_s, c_s = x.forms[4].t_quadratic_in()
    disc = _binary_sub(_binary_mul(b_s, b_s), _binary_scale(_binary_mul(a_s, c_s), 4))
    if all(v == 0 for v in disc):
        raise DegenerateConfigurationError(
            "discriminant vanishes identically; origin locator is ambiguous")
    candidates = binary_multiple_roots(disc)
    solutions = []
    for sigma in candidates:
        av = _binary_eval(a_s, sigma)
        bv = _binary_eval(b_s, sigma)
        cv = _binary_eval(c_s, sigma)
        if av == 0 and bv == 0 and cv == 0:
            raise DegenerateConfigurationError("whole parameter line maps to x4 = 0")
        if av != 0:
            tau = _canonical_param((-bv, 2 * av))
        else:
            tau = (Fraction(1), Fraction(0))
        vals = x.coordinates_at(sigma, tau)
        if vals[0] != 0 and all(v == 0 for v in vals[1:]):
            solutions.append((_canonical_param(sigma), tau))
    solutions.sort(key=lambda st: (_param_sort_key(st[0]), _param_sort_key(st[1])))
    if not solutions:
        raise DegenerateConfigurationError("map does not hit the origin at rational parameters")
    return solutions


def _binary_mul(f, g):
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def _binary_sub(f, g):
    n = max(len(f), len(g))
    f = list(f) + [Fraction(0)] * (n - len(f))
    g = list(g) + [Fraction(0)] * (n - len(g))
    return [a - b for a, b in zip(f, g)]


def _binary_scale(f, k):
    return [k * v for v in f]


def _binary_eval(f, pair):
    from .polynomials import binary_eval

    return binary_eval(f, pair)


def locate_point_on_member(x: BiquadraticMap, axis: str, frozen, target: MoebiusPoint):
    """Parameter of `target` along the parameter circle with `axis` frozen.

    The running coordinate's five binary quadratics are compared with the
    target through their 2x2 minors; the common rational root is the
    parameter.  Raises if none or several."""
    if axis == "t":
        comps = [f.freeze_t(frozen) for f in x.forms]
    else:
        comps = [f.freeze_s(frozen) for f in x.forms]
    z = target.coords
    minors = []
    for i in range(5):
        for j in range(i + 1, 5):
            minor = _binary_sub(_binary_scale(comps[j], z[i]), _binary_scale(comps[i], z[j]))
            minors.append(minor)
    roots = binary_common_roots(minors)
    valid = []
    for r in roots:
        vals = [_binary_eval(c, r) for c in comps]
        if any(v != 0 for v in vals) and projectively_equal(vals, list(z)):
            valid.append(r)
    if len(valid) != 1:
        raise DegenerateConfigurationError(
            f"point parameter not unique: {len(valid)} candidates")
    return valid[0]


# --- main construction -------------------------------------------------------

@dataclass(frozen=True)
class ReconstructionTrace:
    origin_params: tuple
    h_param: Fraction
    point_param: tuple
    steps: tuple


def _canonical_generator(line: StudyLine) -> DualQuaternion:
    """Identity-free generator scaled so its first nonzero coordinate is 1."""
    from .study import _identity_free_generator

    u = _identity_free_generator(line)
    coords = u.coords()
    for c in coords:
        if c != 0:
            return u.scale(Fraction(1) / Fraction(c)) if linalg.is_exact(c) else u.scale(1.0 / c)
    raise DegenerateConfigurationError("zero generator")


def reconstruct_quadric(d: Cyclide, f1: CircleFamily, f2: CircleFamily,
                        tol: float | None = None):
    """Execute the three-line construction; returns (RuledQuadric, trace).

    Preconditions checked: the origin lies on the cyclide and the two
    families meet generically once.
    """
    if not contains_point(d, ORIGIN, tol):
        raise DegenerateConfigurationError("cyclide does not pass through the origin")
    if family_intersection(f1, f2, tol) != 1:
        raise DegenerateConfigurationError("families must have generic intersection 1")
    fs = f1 if f1.axis == "s" else f2
    ft = f2 if f2.axis == "t" else f1
    if fs.axis != "s" or ft.axis != "t":
        raise ValueError("need one s-family and one t-family")
    x = d.param
    (sigma0, tau0) = locate_origin_parameters(x)[0]
    steps = []
    circle_s = family_member(fs, sigma0, tol)
    circle_t = family_member(ft, tau0, tol)
    if isinstance(circle_s, MoebiusPoint) or isinstance(circle_t, MoebiusPoint):
        raise DegenerateCircleError("a parameter circle through the origin degenerates")
    steps.append("origin circles located")
    line_l = lift_circle(circle_s, ORIGIN, tol)
    line_lp = lift_circle(circle_t, ORIGIN, tol)
    steps.append("origin circles lifted")
    gen = _canonical_generator(line_lp)
    last_error = None
    for lam in H_PROBE_PARAMS:
        h = IDENTITY + gen.scale(lam)
        if on_boundary(h, tol):
            continue
        p_pt = orbit_map(ORIGIN_BASE, h)
        try:
            sigma_p = locate_point_on_member(x, "t", tau0, p_pt)
            circle_pp = family_member(fs, sigma_p, tol)
            if isinstance(circle_pp, MoebiusPoint):
                raise DegenerateCircleError("s-family member through p degenerates")
            line_L = lift_circle(circle_pp, p_pt, tol)
        except (DegenerateConfigurationError, DegenerateCircleError, CenterChartError) as err:
            last_error = err
            continue
        glh = _canonical_generator(line_L) * h
        rows = [list(IDENTITY.coords()),
                list(_canonical_generator(line_l).coords()),
                list(gen.coords()),
                list(glh.coords())]
        if linalg.rank(rows, tol) != 4:
            last_error = DegenerateConfigurationError("three lines span less than a 3-space")
            continue
        space = StudyThreeSpace(tuple(tuple(r) for r in rows))
        form = space.restricted_study_form()
        quadric = RuledQuadric(space, tuple(tuple(r) for r in form))
        if not quadric.is_doubly_ruled(tol):
            raise NotDoublyRuledError(
                f"restricted form signature {quadric.signature(tol)}; not doubly ruled")
        seeds = _seed_lines_from_construction(space, line_l, line_lp)
        quadric = RuledQuadric(space, quadric.form, seeds)
        _verify_orbit_inside(quadric, d, tol)
        verdict = check_excluded(quadric)
        if verdict.excluded:
            raise DegenerateConfigurationError(f"quadric is excluded: {verdict.reason}")
        steps.append("quadric certified")
        trace = ReconstructionTrace((sigma0, tau0), lam, sigma_p, tuple(steps))
        return quadric, trace
    raise DegenerateConfigurationError(
        f"no valid probe point on the lifted line: {last_error}")


def _seed_lines_from_construction(space: StudyThreeSpace, line_l: StudyLine,
                                  line_lp: StudyLine):
    """V-local coordinates of the two constructed lines through the identity
    (one per ruling)."""
    seeds = []
    for line in (line_l, line_lp):
        pts = []
        for g in (line.g1, line.g2):
            local = space.to_local(list(g.coords()))
            if local is None:
                raise DegenerateConfigurationError("constructed line left the span")
            pts.append(tuple(local))
        seeds.append(tuple(pts))
    return tuple(seeds)


def _verify_orbit_inside(quadric: RuledQuadric, d: Cyclide, tol: float | None = None):
    """Map a grid of quadric points through the orbit and check the pencil."""
    pencil_a, pencil_b = rulings(quadric, tol)
    for pencil in (pencil_a, pencil_b):
        for param in PENCIL_PROBE_PARAMS[:3]:
            g1, g2 = pencil.ambient_line(param)
            for lam, mu in ((1, 0), (1, 1), (1, -1), (1, 2), (0, 1)):
                coords = tuple(lam * a + mu * b for a, b in zip(g1, g2))
                h = DualQuaternion.from_coords(coords)
                if h.is_zero():
                    continue
                pt = orbit_map(ORIGIN_BASE, h)
                if not contains_point(d, pt, tol):
                    raise OrbitMismatchError(
                        "orbit of the reconstructed quadric leaves the cyclide")


# --- round trip --------------------------------------------------------------

@dataclass(frozen=True)
class RoundtripReport:
    subspace_exact_equal: bool
    subspace_distance: float
    rulings_matched: bool
    families_noncospherical: bool
    steps: tuple

    def as_dict(self):
        return {
            "subspace_exact_equal": self.subspace_exact_equal,
            "subspace_distance": self.subspace_distance,
            "rulings_matched": self.rulings_matched,
            "families_noncospherical": self.families_noncospherical,
            "steps": list(self.steps),
        }


def locate_ruling_parameter(motion: BilinearMotion, line_points, tol: float | None = None):
    """Identify a line of the motion's quadric as a frozen-parameter line.

    Returns (axis, param): axis "s" when the line is {H(param, .)}, axis "t"
    when it is {H(., param)}.
    """
    y, z = line_points
    for axis in ("s", "t"):
        if axis == "s":
            c0 = [motion.coefficient(0, 0).coords(), motion.coefficient(1, 0).coords()]
            c1 = [motion.coefficient(0, 1).coords(), motion.coefficient(1, 1).coords()]
        else:
            c0 = [motion.coefficient(0, 0).coords(), motion.coefficient(0, 1).coords()]
            c1 = [motion.coefficient(1, 0).coords(), motion.coefficient(1, 1).coords()]
        # columns P0(sigma) = c0[0]*sig0 + c0[1]*sig1, P1 likewise; require
        # rank [P0 P1 y] == 2: all 3x3 minors vanish (quadratics in sigma)
        minors = []
        idx_triples = [(i, j, k) for i in range(8) for j in range(i + 1, 8)
                       for k in range(j + 1, 8)]
        for (i, j, k) in idx_triples:
            vals = []
            for sig in ((1, 0), (0, 1), (1, 1)):
                mat = []
                for r in (i, j, k):
                    p0 = sig[0] * c0[0][r] + sig[1] * c0[1][r]
                    p1 = sig[0] * c1[0][r] + sig[1] * c1[1][r]
                    mat.append([p0, p1, y[r]])
                det = (mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
                       - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
                       + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]))
                vals.append(det)
            a, c, s = vals
            minors.append([a, s - a - c, c])
        try:
            roots = binary_common_roots(minors)
        except ValueError:
            continue
        for sigma in roots:
            p0 = [sigma[0] * c0[0][r] + sigma[1] * c0[1][r] for r in range(8)]
            p1 = [sigma[0] * c1[0][r] + sigma[1] * c1[1][r] for r in range(8)]
            if linalg.span_equal([p0, p1], [list(y), list(z)], tol):
                return axis, sigma
    raise DegenerateConfigurationError("line is not a parameter line of the motion")


def roundtrip(motion: BilinearMotion, tol: float | None = None) -> RoundtripReport:
    """Forward orbit, implicitization, reconstruction, and comparison."""
    steps = []
    origin_val = motion.evaluate((Fraction(1), Fraction(0)), (Fraction(1), Fraction(0)))
    if not projectively_equal(origin_val.coords(), IDENTITY.coords(), tol):
        raise ValueError("motion must pass through the identity at the chart origin")
    x = orbit_of_motion(motion)
    steps.append("orbit computed")
    from .cyclide import implicitize

    d = implicitize(x, 40, tol=tol)
    steps.append("pencil certified")
    fs, ft = families(d)
    quadric, trace = reconstruct_quadric(d, fs, ft, tol)
    steps.extend(trace.steps)
    original = motion.coefficient_rows()
    recovered = [list(r) for r in quadric.space.basis]
    exact_equal = linalg.span_equal(original, recovered,
                                    None if linalg.matrix_is_exact(original + recovered) and tol is None else tol)
    distance = linalg.subspace_distance(original, recovered)
    steps.append("span compared")
    pencil_a, pencil_b = rulings(quadric, tol)
    matched = True
    axes_seen = []
    for pencil in (pencil_a, pencil_b):
        pencil_axes = set()
        for param in PENCIL_PROBE_PARAMS:
            g1c, g2c = pencil.ambient_line(param)
            axis, sigma = locate_ruling_parameter(motion, (g1c, g2c), tol)
            pencil_axes.add(axis)
            line = StudyLine(DualQuaternion.from_coords(tuple(g1c)),
                             DualQuaternion.from_coords(tuple(g2c)))
            circ = orbit_of_line(ORIGIN_BASE, line, tol)
            fam = fs if axis == "s" else ft
            member = family_member(fam, sigma, tol)
            if isinstance(circ, MoebiusPoint) or isinstance(member, MoebiusPoint):
                both_points = isinstance(circ, MoebiusPoint) and isinstance(member, MoebiusPoint)
                matched = matched and both_points and projectively_equal(
                    circ.coords, member.coords, tol)
                continue
            from .cyclide import circles_equal_safe

            if not circles_equal_safe(circ, member, tol):
                matched = False
        if len(pencil_axes) != 1:
            matched = False
        axes_seen.append(pencil_axes)
    if axes_seen[0] & axes_seen[1]:
        matched = False
    steps.append("rulings matched" if matched else "ruling mismatch")
    noncosph = True
    for pa, pb in zip(GENERIC_PAIR_PROBES[:5], GENERIC_PAIR_PROBES[1:6]):
        ma = family_member(fs, pa, tol)
        mb = family_member(ft, pb, tol)
        if isinstance(ma, MoebiusPoint) or isinstance(mb, MoebiusPoint):
            continue
        if cospherical(ma, mb, tol):
            noncosph = False
    steps.append("families non-cospherical" if noncosph else "families cospherical")
    return RoundtripReport(exact_equal, distance, matched, noncosph, tuple(steps))


GENERIC_PAIR_PROBES = ((Fraction(1), Fraction(2)), (Fraction(1), Fraction(3)),
                       (Fraction(2), Fraction(1)), (Fraction(1), Fraction(-2)),
                       (Fraction(3), Fraction(1)), (Fraction(1), Fraction(5)))
