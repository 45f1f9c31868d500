"""Quaternion arithmetic.

A :class:`Quaternion` is an immutable 4-tuple ``(a0, a1, a2, a3)`` standing
for ``a0 + a1 i + a2 j + a3 k``.  All products are Hamilton products, so the
order of factors matters everywhere in this package.

Besides the algebra this module holds the two rotation-normalizing helpers
used by the Gram matrix normalization:

* :func:`nu` -- a unit ``v`` with ``v^-1 a v = Re(a) + |Im a| i``;
* :func:`sigma` -- a unit complex ``s`` with ``s^-1 a s`` free of a ``k``
  component and with a non-negative ``j`` component.
"""

from __future__ import annotations

import cmath
import math
from numbers import Real

from .errors import NonUnitError, ZeroDivisorError

EPS = 1e-9


class Quaternion(tuple):
    """Immutable quaternion ``a0 + a1 i + a2 j + a3 k``."""

    __slots__ = ()

    def __new__(cls, a0=0.0, a1=0.0, a2=0.0, a3=0.0):
        return tuple.__new__(cls, (float(a0), float(a1), float(a2), float(a3)))

    @classmethod
    def from_complex(cls, c1, c2=0.0):
        """Build ``c1 + c2 j`` from two complex numbers."""
        c1 = complex(c1)
        c2 = complex(c2)
        return cls(c1.real, c1.imag, c2.real, c2.imag)

    @classmethod
    def coerce(cls, x) -> "Quaternion":
        """Accept a quaternion, a real or complex number, or a length-4 sequence."""
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, Real):
            return cls(x)
        if isinstance(x, complex):
            return cls(x.real, x.imag)
        vals = list(x)
        if len(vals) != 4:
            raise ValueError(f"quaternion needs 4 components, got {len(vals)}")
        return cls(*vals)

    a0 = property(lambda self: self[0])
    a1 = property(lambda self: self[1])
    a2 = property(lambda self: self[2])
    a3 = property(lambda self: self[3])

    @property
    def real(self) -> float:
        return self[0]

    @property
    def imag(self) -> "Quaternion":
        return Quaternion(0.0, self[1], self[2], self[3])

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self[1], self[2], self[3])

    def complex_parts(self) -> tuple[complex, complex]:
        """Return ``(c1, c2)`` with ``self = c1 + c2 j``."""
        return complex(self[0], self[1]), complex(self[2], self[3])

    def conj(self) -> "Quaternion":
        a0, a1, a2, a3 = self
        return Quaternion(a0, -a1, -a2, -a3)

    def norm2(self) -> float:
        a0, a1, a2, a3 = self
        return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3

    def __abs__(self) -> float:
        return math.sqrt(self.norm2())

    def imag_norm(self) -> float:
        return math.sqrt(self[1] * self[1] + self[2] * self[2] + self[3] * self[3])

    def inv(self, tol: float = 0.0) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0.0 or math.sqrt(n2) <= tol:
            raise ZeroDivisorError(f"cannot invert {self!r}")
        a0, a1, a2, a3 = self
        return Quaternion(a0 / n2, -a1 / n2, -a2 / n2, -a3 / n2)

    def is_complex(self, tol: float = 0.0) -> bool:
        return self[2] * self[2] + self[3] * self[3] <= tol * tol * max(1.0, self.norm2())

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (Real, complex)):
                other = Quaternion.coerce(other)
            else:
                return NotImplemented
        return Quaternion(self[0] + other[0], self[1] + other[1],
                          self[2] + other[2], self[3] + other[3])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (Real, complex)):
                other = Quaternion.coerce(other)
            else:
                return NotImplemented
        return Quaternion(self[0] - other[0], self[1] - other[1],
                          self[2] - other[2], self[3] - other[3])

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __neg__(self):
        return Quaternion(-self[0], -self[1], -self[2], -self[3])

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a0, a1, a2, a3 = self
            b0, b1, b2, b3 = other
            return Quaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        if isinstance(other, Real):
            s = float(other)
            return Quaternion(self[0] * s, self[1] * s, self[2] * s, self[3] * s)
        if isinstance(other, complex):
            return self * Quaternion.coerce(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        if isinstance(other, complex):
            return Quaternion.coerce(other) * self
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            s = float(other)
            return Quaternion(self[0] / s, self[1] / s, self[2] / s, self[3] / s)
        # right division a / b = a b^-1
        return self * Quaternion.coerce(other).inv()

    def __repr__(self):
        return "Quaternion({}, {}, {}, {})".format(*self)

    def __str__(self):
        a0, a1, a2, a3 = self
        return f"{a0:+.6g}{a1:+.6g}i{a2:+.6g}j{a3:+.6g}k"


ZERO = Quaternion(0.0)
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def inv(a: Quaternion, tol: float = EPS) -> Quaternion:
    """Multiplicative inverse; raises :class:`ZeroDivisorError` if ``|a| <= tol``."""
    return a.inv(tol)


def prod(*factors: Quaternion) -> Quaternion:
    """Left-to-right Hamilton product of the factors."""
    out = ONE
    for f in factors:
        out = out * f
    return out


def exp_i(theta: float) -> Quaternion:
    """``cos(theta) + i sin(theta)``."""
    return Quaternion(math.cos(theta), math.sin(theta))


def isclose(a: Quaternion, b: Quaternion, tol: float = EPS) -> bool:
    scale = max(1.0, abs(a), abs(b))
    return abs(a - b) <= tol * scale


def similar(a: Quaternion, b: Quaternion, tol: float = EPS) -> bool:
    """True iff ``b = l a l^-1`` for some nonzero ``l``.

    Two quaternions are similar exactly when their real parts and moduli
    agree, which is what is tested (relative to ``max(1, |a|, |b|)``).
    """
    a = Quaternion.coerce(a)
    b = Quaternion.coerce(b)
    scale = max(1.0, abs(a), abs(b))
    return abs(a[0] - b[0]) <= tol * scale and abs(abs(a) - abs(b)) <= tol * scale


NU_EPS = 1e-12


def nu(a: Quaternion, eps: float = NU_EPS) -> Quaternion:
    """Unit quaternion ``v`` with ``v^-1 a v = a0 + |Im a| i``.

    The ``(j, k)`` part of ``a`` counts as zero when ``a2^2 + a3^2`` is at most
    ``eps^2 max(1, |a|^2)``.  The rotation is evaluated without cancellation,
    so a small threshold is safe.
    """
    a = Quaternion.coerce(a)
    _, a1, a2, a3 = a
    jk2 = a2 * a2 + a3 * a3
    if jk2 > eps * eps * max(1.0, a.norm2()):
        r = math.sqrt(a1 * a1 + jk2)
        # r + a1, rewritten for a1 < 0 to avoid cancellation
        s = r + a1 if a1 >= 0 else jk2 / (r - a1)
        den = math.sqrt(2.0 * r * s)
        return Quaternion(s / den, 0.0, -a3 / den, a2 / den)
    if a1 < 0:
        return J
    return ONE


def _unit_complex_sqrt(re: float, im: float) -> Quaternion:
    # principal branch of sqrt(e^{i theta}), theta in (-pi, pi]
    r = math.hypot(re, im)
    root = cmath.sqrt(complex(re / r, im / r))
    if im == 0.0 and re < 0:
        root = 1j
    return Quaternion(root.real, root.imag)


def sigma(a: Quaternion, b: Quaternion, eps: float = EPS) -> Quaternion:
    """Unit complex ``s`` putting ``a`` (or, if ``a`` is complex, ``b``) in ``x0 + x1 i + y j`` form, ``y >= 0``."""
    a = Quaternion.coerce(a)
    b = Quaternion.coerce(b)
    for q in (a, b):
        jk2 = q[2] * q[2] + q[3] * q[3]
        if jk2 > eps * eps * max(1.0, q.norm2()):
            return _unit_complex_sqrt(q[2], q[3])
    return ONE


def unit_polar(q: Quaternion, tol: float = EPS) -> tuple[float, tuple[float, float, float]]:
    """Write a unit quaternion as ``cos(theta) + sin(theta) I``.

    Returns ``(theta, I)`` with ``theta`` in ``[0, pi]`` and ``I`` a unit
    3-vector of ``(i, j, k)`` coefficients.  When ``sin(theta)`` vanishes the
    axis is reported as the ``i`` axis.
    """
    q = Quaternion.coerce(q)
    if abs(abs(q) - 1.0) > tol:
        raise NonUnitError(f"|q| = {abs(q)!r} is not 1")
    s = q.imag_norm()
    if s <= tol:
        return (0.0 if q[0] >= 0 else math.pi), (1.0, 0.0, 0.0)
    theta = math.atan2(s, q[0])
    return theta, (q[1] / s, q[2] / s, q[3] / s)


def conjugator(a: Quaternion, b: Quaternion, tol: float = EPS) -> Quaternion:
    """Unit ``l`` with ``l a l^-1 = b`` for similar ``a`` and ``b``.

    Rotates ``Im(a)`` onto ``Im(b)`` about their common perpendicular.  If
    both are (numerically) real the identity is returned.
    """
    va = a.imag
    vb = b.imag
    na = abs(va)
    nb = abs(vb)
    if na <= tol * max(1.0, abs(a)) or nb <= tol * max(1.0, abs(b)):
        return ONE
    ua = va / na
    ub = vb / nb
    # for unit imaginary u, w: u w = -<u,w> + u x w
    p = ua * ub
    cos_t = -p[0]
    axis = p.imag
    s = abs(axis)
    if s <= 1e-15:
        if cos_t > 0:
            return ONE
        # antiparallel: rotate by pi about any axis orthogonal to ua
        trial = I if abs(ua[1]) < 0.9 else J
        w = (ua * trial).imag
        w = w / abs(w)
        return w
    theta = math.atan2(s, cos_t)
    axis = axis / s
    return Quaternion(math.cos(theta / 2)) + axis * math.sin(theta / 2)
