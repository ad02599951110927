"""The Study quadric in P7, its boundary, the kinematic action on 3-space,
lines through the identity and their rotation/translation classification.

Conventions pinned here and reused everywhere:

* Study pairing: ``p0*q4 + p1*q5 + p2*q6 + p3*q7`` (primal and dual slots
  matched positionally).
* Translation by a vector t is the displacement ``1 - (t/2) eps``; this is
  forced by the action formula (see ``act``).
* The one-parameter rotation subgroup about the axis through point c with
  direction d is spanned by the identity and ``d + (d x c) eps``.  The
  moment is d x c, which is what makes ``act`` fix the axis pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import linalg
from .algebra import (DQ_ONE, DualQuaternion, Quaternion, cross, dot3)
from .errors import (BoundaryPointError, NotThroughIdentityError,
                     ZeroDirectionError, ZeroInputError)
from .moebius import MoebiusPoint, chart_point

IDENTITY = DQ_ONE


def study_pairing(h: DualQuaternion):
    """The Study quadratic form: positional dot of primal and dual parts."""
    return h.p.dot(h.q)


def study_bilinear(a: DualQuaternion, b: DualQuaternion):
    """Polarization of the Study form."""
    val = a.p.dot(b.q) + b.p.dot(a.q)
    if linalg.is_exact(val):
        return Fraction(val) / 2
    return val / 2


def on_study_quadric(h: DualQuaternion, tol: float | None = None) -> bool:
    if h.is_zero():
        raise ZeroInputError("zero dual quaternion is not a projective point")
    val = study_pairing(h)
    if tol is None and linalg.is_exact(val):
        return val == 0
    scale = max(abs(float(c)) for c in h.coords()) ** 2
    return abs(float(val)) <= (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)


def on_boundary(h: DualQuaternion, tol: float | None = None) -> bool:
    """Boundary points of the Study quadric have vanishing primal norm;
    over the reals this means p = 0."""
    val = h.p.norm()
    if tol is None and linalg.is_exact(val):
        return val == 0
    scale = max(abs(float(c)) for c in h.coords()) ** 2
    return abs(float(val)) <= (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)


def act(h: DualQuaternion, v: Quaternion) -> Quaternion:
    """Displace the point v (a pure quaternion) by h.

    (p + q eps, v) -> (p v conj(p) + p conj(q) - q conj(p)) / (p conj(p)).
    This is a left action: act(g * h, v) == act(g, act(h, v)).  Plugging in
    h = 1 - (t/2) eps gives v + t, which pins the translation convention.
    """
    if not v.is_pure():
        raise ValueError("act expects a pure quaternion point")
    den = h.p.norm()
    if den == 0:
        raise BoundaryPointError("action undefined on the Study boundary")
    pc = h.p.conj()
    num = h.p * v * pc + h.p * h.q.conj() - h.q * pc
    if linalg.is_exact(den):
        return num.scale(Fraction(1) / Fraction(den))
    return num.scale(1.0 / den)


class LineKind(Enum):
    ROTATION = "rotation"
    TRANSLATION = "translation"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class StudyLine:
    """A projective line inside the Study quadric, as a spanning pair."""
    g1: DualQuaternion
    g2: DualQuaternion

    def __post_init__(self):
        rows = [list(self.g1.coords()), list(self.g2.coords())]
        exact = linalg.matrix_is_exact(rows)
        tol = None if exact else linalg.RANK_GAP
        if linalg.rank(rows, tol) != 2:
            raise ZeroInputError("spanning points are projectively dependent")

    def spanning_rows(self):
        return [list(self.g1.coords()), list(self.g2.coords())]

    def point_at(self, lam, mu) -> DualQuaternion:
        return self.g1.scale(lam) + self.g2.scale(mu)

    def contains(self, h: DualQuaternion, tol: float | None = None) -> bool:
        rows = self.spanning_rows() + [list(h.coords())]
        return linalg.rank(rows, tol) == 2

    def in_study(self, tol: float | None = None) -> bool:
        checks = (study_pairing(self.g1), study_pairing(self.g2),
                  study_bilinear(self.g1, self.g2))
        if tol is None and all(linalg.is_exact(c) for c in checks):
            return all(c == 0 for c in checks)
        scale = max(max(abs(float(c)) for c in self.g1.coords()),
                    max(abs(float(c)) for c in self.g2.coords())) ** 2
        eps = (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)
        return all(abs(float(c)) <= eps for c in checks)

    @property
    def kind(self) -> LineKind:
        return classify_line(self)


def _identity_free_generator(line: StudyLine) -> DualQuaternion:
    """The spanning point of the line with zero identity component."""
    if not line.contains(IDENTITY):
        raise NotThroughIdentityError("line does not pass through the identity")
    u = line.g2 - IDENTITY.scale(line.g2.p.w)
    if u.is_zero():
        u = line.g1 - IDENTITY.scale(line.g1.p.w)
    if u.is_zero():
        raise NotThroughIdentityError("degenerate spanning pair")
    return u


def classify_line(line: StudyLine) -> LineKind:
    """Rotation, translation, or degenerate (for lines through the identity).

    After normalizing the second generator u to have no identity component:
    rotation iff the primal vector part of u is nonzero; translation iff the
    primal part vanishes and the dual part is a pure vector.
    """
    u = _identity_free_generator(line)
    if not line.in_study():
        return LineKind.DEGENERATE
    if not u.p.is_zero():
        return LineKind.ROTATION
    if u.q.is_pure() and not u.q.is_zero():
        return LineKind.TRANSLATION
    return LineKind.DEGENERATE


def rotation_line(axis_point, axis_dir) -> StudyLine:
    """One-parameter rotation subgroup about the axis {c + lambda*d}.

    Spanned by the identity and d + (d x c) eps.  Every point of the line
    satisfies the Study condition because d . (d x c) = 0, and ``act`` of any
    line point fixes the axis pointwise.
    """
    if all(c == 0 for c in axis_dir):
        raise ZeroDirectionError("axis direction must be nonzero")
    moment = cross(axis_dir, axis_point)
    g = DualQuaternion(Quaternion.from_vector(axis_dir),
                       Quaternion.from_vector(moment))
    return StudyLine(IDENTITY, g)


def translation_line(direction) -> StudyLine:
    """One-parameter translation subgroup along the given direction."""
    if all(c == 0 for c in direction):
        raise ZeroDirectionError("direction must be nonzero")
    zero = 0 * direction[0]
    g = DualQuaternion(Quaternion(zero, zero, zero, zero),
                       Quaternion.from_vector(direction))
    return StudyLine(IDENTITY, g)


@dataclass(frozen=True)
class OrbitBase:
    """Base point data for the orbit map: a quadric point u with u0 != 0 and
    its affine chart image v as a pure quaternion."""
    point: MoebiusPoint

    def __post_init__(self):
        if self.point.coords[0] == 0:
            raise ZeroInputError("orbit base needs u0 != 0")

    @property
    def chart(self) -> Quaternion:
        return Quaternion.from_vector(chart_point(self.point))


def base_locus_conditions(base: OrbitBase, h: DualQuaternion):
    """The three expressions whose common vanishing is the orbit map's
    undefined locus: (p pbar, p v pbar + p qbar - q pbar,
    4 q qbar + 2(q v pbar - p v qbar))."""
    v = base.chart
    p, q = h.p, h.q
    pc, qc = p.conj(), q.conj()
    first = p * pc
    second = p * v * pc + p * qc - q * pc
    third = (q * qc).scale(4) + (q * v * pc - p * v * qc).scale(2)
    return first, second, third


def in_base_locus(base: OrbitBase, h: DualQuaternion, tol: float | None = None) -> bool:
    """Membership in the orbit map's undefined locus.

    Over the reals this is empty for nonzero h (sums of squares force
    p = q = 0), so a True here on real data signals an upstream bug.
    """
    conds = base_locus_conditions(base, h)
    vals = [c for cond in conds for c in cond.coords()]
    if tol is None and all(linalg.is_exact(v) for v in vals):
        return all(v == 0 for v in vals)
    scale = max(abs(float(c)) for c in h.coords()) ** 2
    eps = (tol if tol is not None else linalg.RANK_GAP) * max(scale, 1.0)
    return all(abs(float(v)) <= eps for v in vals)


ORIGIN_BASE = OrbitBase(MoebiusPoint.of(Fraction(1), Fraction(0), Fraction(0),
                                        Fraction(0), Fraction(0)))
