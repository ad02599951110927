"""The orbit map from the Study quadric to the Moebius quadric, orbits of
lines (circles or points) and of bilinear motions (biquadratic maps).

For a base point u with chart image v, the orbit of p + q*eps is the
projective 5-tuple

    (p pbar : w1 : w2 : w3 : 4 q qbar - p pbar v^2 + 2(q v pbar - p v qbar))

where p v pbar + p qbar - q pbar = w1 i + w2 j + w3 k.  The square v^2 of a
pure quaternion is the real scalar -|v|^2, so the last coordinate is real.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import DualQuaternion, Quaternion
from .errors import (BaseLocusError, BaseLocusOnLineError, BasepointError,
                     DegenerateMotionError, ZeroInputError)
from .moebius import Circle, MoebiusPoint, circle_through, projectively_equal
from .polynomials import BidegreeForm, bilinear_pair_product
from .study import OrbitBase, StudyLine, base_locus_conditions, on_study_quadric

# Fixed line sampling parameters: 0, 1, -1, 2, 1/2 in the affine chart.
LINE_SAMPLE_PARAMS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2),
                      Fraction(1, 2), Fraction(3), Fraction(-2), Fraction(1, 3))


def orbit_coordinates(base: OrbitBase, h: DualQuaternion):
    """The five orbit coordinates of h, unnormalized."""
    v = base.chart
    p, q = h.p, h.q
    pc, qc = p.conj(), q.conj()
    x0 = p.norm()
    w = p * v * pc + p * qc - q * pc
    vv = v.norm()  # |v|^2; the quaternion square of v is -|v|^2
    tail = (q * v * pc - p * v * qc).scale(2)
    x4 = 4 * q.norm() + x0 * vv + tail.w
    return (x0, w.x, w.y, w.z, x4)


def orbit_map(base: OrbitBase, h: DualQuaternion) -> MoebiusPoint:
    """Image of a Study point under the orbit map with the given base.

    Boundary points (p = 0) map to the projection center; only the (real
    point free) base locus is excluded.
    """
    if not on_study_quadric(h):
        raise ZeroInputError("orbit map defined on the Study quadric only")
    coords = orbit_coordinates(base, h)
    if all(c == 0 for c in coords):
        raise BaseLocusError("point lies in the orbit map's base locus")
    return MoebiusPoint(tuple(coords))


@dataclass(frozen=True)
class BilinearMotion:
    """Dual-quaternion valued bilinear form on P1 x P1.

    Coefficients in monomial order s0*t0, s0*t1, s1*t0, s1*t1; the primal
    parts in ``a``, the dual parts in ``b``.  A valid motion satisfies the
    Study condition identically in (s, t).
    """
    a: tuple
    b: tuple

    def coefficient(self, i: int, j: int) -> DualQuaternion:
        return DualQuaternion(self.a[2 * i + j], self.b[2 * i + j])

    def evaluate(self, s, t) -> DualQuaternion:
        s0, s1 = s
        t0, t1 = t
        mon = (s0 * t0, s0 * t1, s1 * t0, s1 * t1)
        out = None
        for c, m in zip((self.coefficient(0, 0), self.coefficient(0, 1),
                         self.coefficient(1, 0), self.coefficient(1, 1)), mon):
            term = c.scale(m)
            out = term if out is None else out + term
        return out

    def coefficient_rows(self):
        """The four coefficients as 8-coordinate rows (their span is the
        3-space carrying the motion's quadric)."""
        return [list(self.coefficient(i, j).coords())
                for i in (0, 1) for j in (0, 1)]

    def study_defect(self) -> BidegreeForm:
        """Biquadratic form <a(s,t), b(s,t)>; identically zero iff the whole
        motion lies on the Study quadric."""
        table = {}
        for i in (0, 1):
            for j in (0, 1):
                inner = {}
                for k in (0, 1):
                    for l in (0, 1):
                        inner[(k, l)] = self.a[2 * i + j].dot(self.b[2 * k + l])
                table[(i, j)] = inner
        return bilinear_pair_product(table)

    def satisfies_study(self, tol: float | None = None) -> bool:
        defect = self.study_defect()
        if tol is None and all(linalg.is_exact(c) for c in defect.coefficients()):
            return defect.is_zero()
        scale = max(max(abs(float(v)) for v in c.coords()) for c in self.a + self.b) ** 2
        eps = (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)
        return all(abs(float(c)) <= eps for c in defect.coefficients())

    def is_rotations_only(self) -> bool:
        return all(c.is_zero() for c in self.b)

    def span_rank(self, tol: float | None = None) -> int:
        return linalg.rank(self.coefficient_rows(), tol)


@dataclass(frozen=True)
class BiquadraticMap:
    """Five real bidegree-(2,2) forms mapping P1 x P1 into P4; valid maps
    satisfy X0*X4 = X1^2 + X2^2 + X3^2 as a polynomial identity."""
    forms: tuple

    def moebius_defect(self) -> BidegreeForm:
        x = self.forms
        return x[0] * x[4] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3]

    def satisfies_moebius_identity(self, tol: float | None = None) -> bool:
        defect = self.moebius_defect()
        coeffs = defect.coefficients()
        if tol is None and all(linalg.is_exact(c) for c in coeffs):
            return defect.is_zero()
        scale = max(max(abs(float(v)) for v in f.coefficients()) for f in self.forms) ** 2
        eps = (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)
        return all(abs(float(c)) <= eps for c in coeffs)

    def coordinates_at(self, s, t):
        return tuple(f.evaluate(s, t) for f in self.forms)


def eval_biquadratic(x: BiquadraticMap, s, t) -> MoebiusPoint:
    """Evaluate the five forms; a basepoint (all five zero) is an error.

    Basepoints are complex for valid data, so hitting one with real input
    signals an invalid map.
    """
    coords = x.coordinates_at(s, t)
    if all(c == 0 for c in coords):
        raise BasepointError("all five coordinates vanish at these parameters")
    return MoebiusPoint(coords)


def _quat_bilinear_product_forms(coeffs_left, coeffs_right, conj_right: bool):
    """The four component (2,2)-forms of a(s,t) * b(s,t) (optionally with the
    right factor conjugated coefficientwise)."""
    grids = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(4)]
    any_float = any(not linalg.is_exact(v)
                    for c in tuple(coeffs_left) + tuple(coeffs_right)
                    for v in c.coords())
    if any_float:
        grids = [[[0.0] * 3 for _ in range(3)] for _ in range(4)]
    for i in (0, 1):
        for j in (0, 1):
            for k in (0, 1):
                for l in (0, 1):
                    left = coeffs_left[2 * i + j]
                    right = coeffs_right[2 * k + l]
                    prod = left * (right.conj() if conj_right else right)
                    row, col = i + k, j + l
                    for comp, val in enumerate(prod.coords()):
                        grids[comp][row][col] += val
    return [BidegreeForm.from_rows(g) for g in grids]


def orbit_of_motion(m: BilinearMotion) -> BiquadraticMap:
    """Biquadratic orbit map of a bilinear Study motion (origin base point):
    X0 = a abar, (X1,X2,X3) = vector part of a bbar - b abar, X4 = 4 b bbar."""
    if not m.satisfies_study():
        raise ZeroInputError("motion must satisfy the Study condition identically")
    abar = _quat_bilinear_product_forms(m.a, m.a, conj_right=True)
    bbar = _quat_bilinear_product_forms(m.b, m.b, conj_right=True)
    ab = _quat_bilinear_product_forms(m.a, m.b, conj_right=True)
    ba = _quat_bilinear_product_forms(m.b, m.a, conj_right=True)
    x0 = abar[0]
    x4 = bbar[0].scale(4)
    w = [ab[c] - ba[c] for c in (1, 2, 3)]
    out = BiquadraticMap((x0, w[0], w[1], w[2], x4))
    if all(f.is_zero() for f in out.forms):
        raise DegenerateMotionError("all orbit coordinates vanish identically")
    return out


# kept under the name used by the wider API: the motion parametrizes a ruled
# quadric surface, and this is that surface's orbit
orbit_of_quadric = orbit_of_motion


def orbit_of_line(base: OrbitBase, line: StudyLine, tol: float | None = None):
    """Orbit of a line: a certified Circle, or a MoebiusPoint if constant.

    Samples fixed rational parameters, skips base-locus samples (impossible
    over the reals), and certifies the conic by rank.
    """
    samples = []
    skipped = 0
    for lam in LINE_SAMPLE_PARAMS:
        h = line.point_at(1, lam)
        try:
            samples.append(orbit_map(base, h))
        except BaseLocusError:
            skipped += 1
        if len(samples) == 6:
            break
    try:
        samples.append(orbit_map(base, line.point_at(0, 1)))
    except BaseLocusError:
        skipped += 1
    if len(samples) < 5:
        raise BaseLocusOnLineError("line meets the base locus at every probe")
    first = samples[0]
    if all(projectively_equal(first.coords, s.coords, tol) for s in samples[1:]):
        return first
    rows = [list(s.coords) for s in samples]
    rk = linalg.rank(rows, tol)
    if rk != 3:
        raise BaseLocusOnLineError(
            f"line orbit has sample rank {rk}; expected a conic (rank 3)")
    witnesses = _independent_triple(samples, tol)
    return circle_through(*witnesses, tol=tol)


def _independent_triple(points, tol):
    chosen = [points[0]]
    for cand in points[1:]:
        trial = [list(p.coords) for p in chosen] + [list(cand.coords)]
        if linalg.rank(trial, tol) == len(chosen) + 1:
            chosen.append(cand)
        if len(chosen) == 3:
            return chosen
    raise BaseLocusOnLineError("could not find three independent orbit samples")
