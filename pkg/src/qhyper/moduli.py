"""Gram matrices of boundary quadruples and their moduli coordinates.

A quadruple of distinct boundary points determines its Gram matrix up to
``G -> D* G D`` with ``D`` diagonal.  :func:`normalize` picks the unique
representative

    [[0, 1, -e^{iA}, k1], [1, 0, 1, k2], [., 1, 0, 1], [., ., 1, 0]]

with ``k1 = c1 + t j`` (``t >= 0``) and ``k2 = c2 + c3 j`` (``c3 >= 0`` real
when ``t = 0``).  The tuple ``(c1, c2, c3, t, A)`` is a :class:`ModuliPoint`
and :func:`reconstruct` inverts the map.

When ``A = 0`` the entry ``g13 = -1`` is real, so every unit rescaling of
the lifts keeps the normal form and the two rotations used in the general
case no longer pin the matrix down.  In that case the imaginary part of
``k1`` is additionally rotated onto ``+i`` (so ``t = 0``); see
:func:`is_canonical`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, NotInModuliSpaceError
from .hermitian import EPS, Matrix, Point, Vector, classify, inner, is_boundary, project, rscale, standard_lift
from .invariants import _distinct, cartan_from_product
from .qlinalg import right_dependent
from .quaternion import ONE, ZERO, Quaternion, conjugator, exp_i, nu, sigma

D_TOL = 1e-8
SLACK = 1e-10


@dataclass(frozen=True)
class ModuliPoint:
    c1: complex
    c2: complex
    c3: complex
    t: float
    A: float

    @property
    def kappa1(self) -> Quaternion:
        return Quaternion.from_complex(self.c1, self.t)

    @property
    def kappa2(self) -> Quaternion:
        return Quaternion.from_complex(self.c2, self.c3)

    @classmethod
    def from_kappas(cls, A: float, kappa1: Quaternion, kappa2: Quaternion) -> "ModuliPoint":
        """Read coordinates off ``k1``, ``k2`` already in normal form.

        ``t`` is taken as the modulus of the ``(j, k)`` part of ``k1``, so it is
        non-negative even when rounding leaves a tiny ``k`` component.
        """
        t = math.hypot(kappa1[2], kappa1[3])
        return cls(
            complex(kappa1[0], kappa1[1]),
            complex(kappa2[0], kappa2[1]),
            complex(kappa2[2], kappa2[3]),
            t,
            A,
        )

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.c1.real, self.c1.imag, self.c2.real, self.c2.imag,
            self.c3.real, self.c3.imag, self.t, self.A,
        )

    def size2(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2 + abs(self.c3) ** 2 + self.t ** 2

    def distance(self, other: "ModuliPoint") -> float:
        """Largest coordinate difference."""
        return max(abs(a - b) for a, b in zip(self.as_tuple(), other.as_tuple()))


@dataclass(frozen=True)
class NormalizedGram:
    A: float
    kappa1: Quaternion
    kappa2: Quaternion

    def matrix(self) -> Matrix:
        one = ONE
        g13 = -exp_i(self.A)
        upper = {(0, 1): one, (1, 2): one, (2, 3): one, (0, 2): g13, (0, 3): self.kappa1, (1, 3): self.kappa2}
        rows = [[ZERO] * 4 for _ in range(4)]
        for (i, j), v in upper.items():
            rows[i][j] = v
            rows[j][i] = v.conj()
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Normalization:
    gram: NormalizedGram
    moduli: ModuliPoint
    lifts: tuple[Vector, Vector, Vector, Vector]


def gram(lifts) -> Matrix:
    """``(<p_i, p_j>)`` for four null lifts."""
    lifts = tuple(lifts)
    if len(lifts) != 4:
        raise GeometryError("a Gram matrix needs exactly four lifts")
    for z in lifts:
        if classify(z) != "null":
            raise GeometryError("Gram matrices are defined for null lifts only")
    return tuple(tuple(inner(a, b) for b in lifts) for a in lifts)


def gram_residual(g: Matrix, h: Matrix) -> float:
    return max(abs(g[i][j] - h[i][j]) for i in range(4) for j in range(4))


def _check_quadruple(points, tol):
    if len(points) != 4:
        raise GeometryError("expected four points")
    for p in points:
        if not is_boundary(p, tol):
            raise GeometryError(f"{p!r} is not a boundary point")
    _distinct(points, tol)


def normalize(p1: Point, p2: Point, p3: Point, p4: Point, eps: float = EPS) -> Normalization:
    """Normalized Gram matrix, moduli point and normalized lifts of a boundary quadruple."""
    _check_quadruple((p1, p2, p3, p4), eps)
    P = [standard_lift(p) for p in (p1, p2, p3, p4)]
    g21 = inner(P[1], P[0])
    lam2 = g21.inv()
    lam3 = inner(P[2], P[1]).inv() * inner(P[0], P[1])
    lam4 = inner(P[3], P[2]).inv() * inner(P[1], P[2]) * g21.inv()
    a = g21 * inner(P[1], P[2]).inv() * inner(P[0], P[2])
    A = cartan_from_product(a)
    # nu(conj a) rather than nu(a): this is the choice that yields g13 = -e^{+iA}
    lam1 = nu(a.conj(), eps) * (1.0 / math.sqrt(abs(a)))
    lam1_bar_inv = lam1.conj().inv()
    scales = [lam1, lam2 * lam1_bar_inv, lam3 * lam1, lam4 * lam1_bar_inv]
    lifts = [rscale(z, s) for z, s in zip(P, scales)]

    g14 = inner(lifts[0], lifts[3])
    g24 = inner(lifts[1], lifts[3])
    if a.imag_norm() <= eps * abs(a):
        # A = 0: spend the extra freedom on moving Im(k1) (or Im(k2)) onto +i
        target = g14 if g14.imag_norm() > eps * max(1.0, abs(g14)) else g24
        rho = conjugator(target, Quaternion(target[0], target.imag_norm()), eps).conj()
        lifts = [rscale(z, rho) for z in lifts]
        g14 = rho.conj() * g14 * rho
        g24 = rho.conj() * g24 * rho
    mu = sigma(g14, g24, eps)
    lifts = tuple(rscale(z, mu) for z in lifts)
    k1 = mu.conj() * g14 * mu
    k2 = mu.conj() * g24 * mu
    m = ModuliPoint.from_kappas(A, k1, k2)
    return Normalization(NormalizedGram(A, m.kappa1, m.kappa2), m, lifts)


def tau(p1: Point, p2: Point, p3: Point, p4: Point, eps: float = EPS) -> ModuliPoint:
    return normalize(p1, p2, p3, p4, eps).moduli


def d_of_g(m: ModuliPoint) -> float:
    c1, c2, c3, t, A = m.c1, m.c2, m.c3, m.t, m.A
    e = cmath.exp(1j * A)
    return (
        1 + abs(c1) ** 2 + abs(c2) ** 2 + abs(c3) ** 2 + t * t
        - 2 * c1.real
        + 2 * (c2 / e).real
        + 2 * ((c1.conjugate() * c2 + t * c3.conjugate()) * e).real
    )


def d_of_kappa(A: float, kappa1: Quaternion, kappa2: Quaternion) -> float:
    """The same scalar written with quaternion products."""
    e = exp_i(A)
    return (
        1 + kappa1.norm2() + kappa2.norm2()
        - 2 * kappa1[0]
        + 2 * (kappa2 * e.conj())[0]
        + 2 * (kappa1.conj() * kappa2 * e)[0]
    )


def satisfies_restrictions(m: ModuliPoint, slack: float = SLACK) -> bool:
    """The sign and non-vanishing restrictions, plus ``t = 0 => c3 >= 0``."""
    k1, k2 = m.kappa1, m.kappa2
    n1, n2 = abs(k1), abs(k2)
    if not (-slack <= m.A <= math.pi / 2 + slack):
        return False
    if (m.c1 * m.c2.conjugate()).real + m.t * m.c3.real > slack * (1 + n1 * n2):
        return False
    if m.c2.real > slack * (1 + n2):
        return False
    if m.t < -slack:
        return False
    if n1 <= slack or n2 <= slack:
        return False
    if m.t <= slack * (1 + n1):
        if abs(m.c3.imag) > slack * (1 + n2) * 1e2 or m.c3.real < -slack * (1 + n2):
            return False
    return True


def d_tolerance(m: ModuliPoint, tol: float = D_TOL) -> float:
    return tol * (1 + m.size2())


def is_in_moduli_space(m: ModuliPoint, n: int, tol: float = D_TOL, slack: float = SLACK) -> bool:
    if n < 2:
        raise GeometryError("n must be at least 2")
    if not satisfies_restrictions(m, slack):
        return False
    d = d_of_g(m)
    band = d_tolerance(m, tol)
    if n == 2:
        return abs(d) <= band
    return d <= band


def is_canonical(m: ModuliPoint, tol: float = 1e-9) -> bool:
    """Whether ``m`` is the representative :func:`normalize` would return.

    Only differs from membership when ``A = 0``, where ``t = 0`` and
    ``Im c1 >= 0`` are also required (and ``Im c2 >= 0`` if ``c1`` is real).
    """
    if m.A > tol:
        return True
    scale = 1 + abs(m.kappa1)
    if m.t > tol * scale or m.c1.imag < -tol * scale:
        return False
    if abs(m.c1.imag) <= tol * scale:
        return abs(m.c3) <= tol * (1 + abs(m.kappa2)) and m.c2.imag >= -tol
    return True


# ---------------------------------------------------------------------------
# reconstruction


def _lifts_from_vectors(m: ModuliPoint, alpha: list, beta: list) -> tuple[Vector, ...]:
    k1, k2 = m.kappa1, m.kappa2
    n = len(alpha) + 1
    n1 = tuple([ZERO] * n) + (ONE,)
    n2 = (ONE,) + tuple([ZERO] * n)
    n3 = (-exp_i(-m.A),) + tuple(alpha) + (ONE,)
    n4 = (k1.conj(),) + tuple(beta) + (k2.conj(),)
    return (n1, n2, n3, n4)


def reconstruction_lifts(m: ModuliPoint, n: int, tol: float = D_TOL) -> tuple[Vector, ...]:
    """Null lifts ``n1..n4`` (free scalar fixed to 1) whose Gram matrix is that of ``m``."""
    if not is_in_moduli_space(m, n, tol):
        raise NotInModuliSpaceError(f"{m!r} is not in the moduli space for n = {n}")
    d = d_of_g(m)
    band = d_tolerance(m, tol)
    k1, k2 = m.kappa1, m.kappa2
    cos_a = math.cos(m.A)
    zeros = [ZERO] * (n - 1)
    target = NormalizedGram(m.A, k1, k2).matrix()
    candidates = []
    if cos_a > 0:
        root = math.sqrt(2 * cos_a)
        alpha = [Quaternion(root)] + zeros[1:]
        mu = (ONE + exp_i(m.A) * k2.conj() - k1.conj()) * (1.0 / (2 * cos_a))
        if d < -band:
            beta = [mu * root] + zeros[1:-1] + [Quaternion(math.sqrt(-d) / root)]
        else:
            beta = [a * mu for a in alpha]
        candidates.append(_lifts_from_vectors(m, alpha, beta))
    if cos_a <= 1e-6 and d >= -band:
        s = math.sqrt(max(0.0, -2 * (k1 * k2.conj())[0]))
        candidates.append(_lifts_from_vectors(m, zeros, [Quaternion(s)] + zeros[1:]))
    if not candidates:
        raise NotInModuliSpaceError("D < 0 is impossible when A = pi/2")
    return min(candidates, key=lambda c: gram_residual(_raw_gram(c), target))


def _raw_gram(lifts) -> Matrix:
    return tuple(tuple(inner(a, b) for b in lifts) for a in lifts)


def reconstruct(m: ModuliPoint, n: int, tol: float = D_TOL) -> tuple[Point, Point, Point, Point]:
    """Four boundary points whose moduli point is ``m``: ``o``, infinity and two more."""
    lifts = reconstruction_lifts(m, n, tol)
    return tuple(project(z, 1e-7) for z in lifts)


def lifts_dependent(lifts, rel_tol: float = 1e-8) -> bool:
    """Right-linear dependence of four lifts (realified rank test)."""
    return right_dependent(list(lifts), rel_tol)


# ---------------------------------------------------------------------------
# semi-normalized Gram matrices


def semi_normalize(p1: Point, p2: Point, p3: Point, p4: Point, eps: float = EPS) -> tuple[Quaternion, Quaternion, Quaternion]:
    """``(w1, w2, w3) = (g14, g24, g13)`` for the lifts rescaled by a real ``l1``."""
    _check_quadruple((p1, p2, p3, p4), eps)
    P = [standard_lift(p) for p in (p1, p2, p3, p4)]
    g21 = inner(P[1], P[0])
    lam2 = g21.inv()
    lam3 = inner(P[2], P[1]).inv() * inner(P[0], P[1])
    lam4 = inner(P[3], P[2]).inv() * inner(P[1], P[2]) * g21.inv()
    a = g21 * inner(P[1], P[2]).inv() * inner(P[0], P[2])
    lam1 = 1.0 / math.sqrt(abs(a))
    m = [rscale(P[0], lam1), rscale(P[1], lam2 * (1 / lam1)), rscale(P[2], lam3 * lam1), rscale(P[3], lam4 * (1 / lam1))]
    return inner(m[0], m[3]), inner(m[1], m[3]), inner(m[0], m[2])


def semi_equivalent(w, v, tol: float = 1e-8) -> bool:
    """Whether ``v = conj(mu) w mu`` (entrywise) for some unit ``mu``.

    Conjugation by units acts on imaginary parts as SO(3), so this holds iff
    real parts agree, the imaginary parts have the same Gram matrix and, when
    they span space, the same orientation.
    """
    scale = 1.0 + max(abs(q) for q in tuple(w) + tuple(v))
    if any(abs(a[0] - b[0]) > tol * scale for a, b in zip(w, v)):
        return False
    x = np.array([q.vector for q in w])
    y = np.array([q.vector for q in v])
    if np.max(np.abs(x @ x.T - y @ y.T)) > tol * scale * scale:
        return False
    dx, dy = np.linalg.det(x), np.linalg.det(y)
    if abs(dx) > math.sqrt(tol) * scale ** 3 and dx * dy < 0:
        return False
    return True


# ---------------------------------------------------------------------------
# sampling


def _to_normal_form(A: float, k1: Quaternion, k2: Quaternion) -> ModuliPoint:
    mu = sigma(k1, k2)
    return ModuliPoint.from_kappas(A, mu.conj() * k1 * mu, mu.conj() * k2 * mu)


def _unit(rng) -> Quaternion:
    q = Quaternion(*rng.normal(size=4))
    return q * (1.0 / abs(q))


def _random_kappa2(rng) -> Quaternion:
    q = Quaternion(*rng.normal(size=4))
    return Quaternion(-abs(q[0]), q[1], q[2], q[3])


def random_moduli_surface(rng, a_min: float = 0.02, min_kappa: float = 0.05) -> ModuliPoint:
    """Random point with ``D = 0`` (a quadruple in a quaternionic 2-space).

    Solves the reconstruction equations backwards: pick ``A``, ``k2`` and the
    directions of the two tail quaternions, then the length of the second one
    from a real quadratic, which determines ``k1``.
    """
    while True:
        A = rng.uniform(a_min, math.pi / 2)
        k2 = _random_kappa2(rng)
        big_k = ONE + k2 * exp_i(-A)
        alpha = _unit(rng) * math.sqrt(2 * math.cos(A))
        b = _unit(rng)
        bb = (b.conj() * alpha * k2.conj())[0]
        rr = (big_k * k2.conj())[0]
        disc = bb * bb - 2 * rr
        if disc < 0:
            continue
        roots = [s for s in (bb + math.sqrt(disc), bb - math.sqrt(disc)) if s >= 0]
        if not roots:
            continue
        s = roots[rng.integers(len(roots))]
        k1 = big_k - b.conj() * alpha * s
        if abs(k1) < min_kappa or abs(k2) < min_kappa:
            continue
        m = _to_normal_form(A, k1, k2)
        if m.t < 1e-6 or not satisfies_restrictions(m):
            continue
        return m


def random_moduli_orthogonal(rng, min_kappa: float = 0.05) -> ModuliPoint:
    """Random ``D = 0`` point with ``A = pi/2`` (then ``k1 = 1 - k2 i``)."""
    while True:
        k2 = _random_kappa2(rng)
        k1 = ONE - k2 * Quaternion(0, 1)
        if abs(k1) < min_kappa or abs(k2) < min_kappa:
            continue
        m = _to_normal_form(math.pi / 2, k1, k2)
        if m.t < 1e-6 or not satisfies_restrictions(m):
            continue
        return m


def random_moduli_interior(rng, a_min: float = 0.02, margin: float = 1e-3, min_kappa: float = 0.05) -> ModuliPoint:
    """Random point with ``D < -margin`` (needs ``n >= 3``)."""
    while True:
        A = rng.uniform(a_min, math.pi / 2 - 0.02)
        k2 = _random_kappa2(rng)
        if k2[0] + k2.norm2() * math.cos(A) >= 0:
            continue
        big_k = ONE + k2 * exp_i(-A)
        k1 = big_k + Quaternion(*rng.normal(size=4)) * rng.uniform(0, 1)
        if abs(k1) < min_kappa or abs(k2) < min_kappa:
            continue
        if d_of_kappa(A, k1, k2) >= -margin:
            continue
        m = _to_normal_form(A, k1, k2)
        if m.t < 1e-6 or not satisfies_restrictions(m):
            continue
        return m
