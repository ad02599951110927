"""Quaternion and dual quaternion arithmetic over a generic scalar.

Scalars may be exact (int/Fraction) or float; no normalization happens here,
projective concerns live in the geometry modules.  The basis relations are
i*i = j*j = k*k = i*j*k = -1, and the dual unit is central with square zero.

Coordinate convention used everywhere: a dual quaternion ``p + q*eps`` has
eight coordinates ``(p0, p1, p2, p3, q4, q5, q6, q7)``; pairings that combine
a primal and a dual part (the Study form, the dual part of the norm) match
the slots positionally, ``p0*q4 + p1*q5 + p2*q6 + p3*q7``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Quaternion:
    w: object
    x: object
    y: object
    z: object

    @staticmethod
    def from_coords(c):
        return Quaternion(c[0], c[1], c[2], c[3])

    @staticmethod
    def from_vector(v):
        """Pure quaternion from a 3-vector."""
        zero = 0 * v[0]
        return Quaternion(zero, v[0], v[1], v[2])

    def coords(self):
        return (self.w, self.x, self.y, self.z)

    def vector(self):
        return (self.x, self.y, self.z)

    def __add__(self, o):
        return Quaternion(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o):
        return Quaternion(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, o):
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = o.w, o.x, o.y, o.z
        return Quaternion(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def scale(self, k):
        return Quaternion(k * self.w, k * self.x, k * self.y, k * self.z)

    def conj(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self):
        """h * conj(h) collapsed to its scalar value."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def dot(self, o):
        return self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z

    def is_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def is_pure(self) -> bool:
        return self.w == 0


Q_ZERO = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
Q_ONE = Quaternion(Fraction(1), Fraction(0), Fraction(0), Fraction(0))
Q_I = Quaternion(Fraction(0), Fraction(1), Fraction(0), Fraction(0))
Q_J = Quaternion(Fraction(0), Fraction(0), Fraction(1), Fraction(0))
Q_K = Quaternion(Fraction(0), Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class DualNumber:
    real: object
    dual: object


@dataclass(frozen=True)
class DualQuaternion:
    p: Quaternion
    q: Quaternion

    @staticmethod
    def from_coords(c):
        return DualQuaternion(Quaternion.from_coords(c[:4]), Quaternion.from_coords(c[4:]))

    @staticmethod
    def from_primal(p: Quaternion):
        zero = 0 * p.w
        return DualQuaternion(p, Quaternion(zero, zero, zero, zero))

    def coords(self):
        return self.p.coords() + self.q.coords()

    def __add__(self, o):
        return DualQuaternion(self.p + o.p, self.q + o.q)

    def __sub__(self, o):
        return DualQuaternion(self.p - o.p, self.q - o.q)

    def __neg__(self):
        return DualQuaternion(-self.p, -self.q)

    def __mul__(self, o):
        """(p + q eps)(p' + q' eps) = p p' + (p q' + q p') eps."""
        return DualQuaternion(self.p * o.p, self.p * o.q + self.q * o.p)

    def scale(self, k):
        return DualQuaternion(self.p.scale(k), self.q.scale(k))

    def conj(self):
        return DualQuaternion(self.p.conj(), self.q.conj())

    def norm(self) -> DualNumber:
        """h * conj(h); the i, j, k parts cancel in both slots."""
        real = self.p.norm()
        dual = 2 * self.p.dot(self.q)
        return DualNumber(real, dual)

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()


DQ_ZERO = DualQuaternion(Q_ZERO, Q_ZERO)
DQ_ONE = DualQuaternion(Q_ONE, Q_ZERO)
DQ_EPS = DualQuaternion(Q_ZERO, Q_ONE)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def dq_mul(a: DualQuaternion, b: DualQuaternion) -> DualQuaternion:
    return a * b


def dq_conj(h: DualQuaternion) -> DualQuaternion:
    return h.conj()


def dq_norm(h: DualQuaternion) -> DualNumber:
    return h.norm()


def dq_norm_full(h: DualQuaternion) -> DualQuaternion:
    """h * conj(h) as a dual quaternion, for tests that check the vector
    parts really vanish."""
    return h * h.conj()


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot3(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
