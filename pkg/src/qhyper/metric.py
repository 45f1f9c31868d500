"""Geodesics, quaternionic lines and distances to them.

Distances are returned as the Bergman distance ``rho`` itself; the closed
formulas give ``cosh^2(rho / 2)``, which is clamped below at 1 before the
inverse hyperbolic cosine.

Orthogonal projection to a quaternionic line spanned by two boundary points
is computed in the normal form where the two points sit at ``o`` and
infinity: there the line is ``{(x, 0, ..., 0)}`` and the projection simply
drops the tail coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GeometryError
from .hermitian import (
    EPS,
    Matrix,
    Point,
    Vector,
    apply,
    dilation,
    form,
    form_matrix,
    heisenberg_translation,
    identity,
    inner,
    inverse,
    is_boundary,
    is_interior,
    matmul,
    project,
    rscale,
    standard_lift,
    vadd,
)
from .invariants import cross_ratio_lifts, eta_lifts
from .quaternion import ZERO, Quaternion


def _rho(cosh2_half: float) -> float:
    return 2.0 * math.acosh(math.sqrt(max(1.0, cosh2_half)))


def _require_interior(z: Point, tol: float):
    if not is_interior(z, tol):
        raise GeometryError(f"{z!r} is not an interior point")


def _require_boundary(u: Point, tol: float):
    if not is_boundary(u, tol):
        raise GeometryError(f"{u!r} is not a boundary point")


@dataclass(frozen=True)
class Geodesic:
    """Geodesic with boundary endpoints ``u`` (reached as t -> +inf) and ``v``.

    ``lift_u`` is the standard lift of ``u``; ``lift_v`` is the standard lift
    of ``v`` rescaled on the right so that ``<lift_u, lift_v> = -1``.
    """

    u: Point
    v: Point
    lift_u: Vector
    lift_v: Vector

    @classmethod
    def between(cls, u: Point, v: Point, tol: float = EPS) -> "Geodesic":
        _require_boundary(u, tol)
        _require_boundary(v, tol)
        uu = standard_lift(u)
        vv = standard_lift(v)
        c = inner(uu, vv)
        if abs(c) <= tol:
            raise GeometryError("endpoints coincide")
        lam = -(inner(vv, uu).inv())
        return cls(u, v, uu, rscale(vv, lam))

    def lift(self, t: float) -> Vector:
        return vadd(rscale(self.lift_u, math.exp(t / 2)), rscale(self.lift_v, math.exp(-t / 2)))

    def parameter(self, z: Point) -> float:
        """Arc-length parameter of the orthogonal projection of ``z``."""
        zz = standard_lift(z)
        return math.log(abs(inner(self.lift_v, zz)) / abs(inner(self.lift_u, zz)))


def geodesic_point(g: Geodesic, t: float) -> Point:
    return project(g.lift(t))


def geodesic_through(z: Point, w: Point, tol: float = EPS) -> tuple[Geodesic, float, float]:
    """Geodesic through two interior points, oriented from ``z`` towards ``w``.

    Returns ``(g, t_z, t_w)`` with ``t_z < t_w``.
    """
    _require_interior(z, tol)
    _require_interior(w, tol)
    zz = standard_lift(z)
    ww = standard_lift(w)
    c = inner(zz, ww)
    ww = rscale(ww, -c * (1.0 / abs(c)))
    # in the real plane spanned by zz and ww the form is a real quadratic form
    a = form(zz)
    b = inner(zz, ww)[0]
    d = form(ww)
    disc = math.sqrt(max(0.0, b * b - a * d))
    ends = []
    for s in ((-b + disc) / a, (-b - disc) / a):
        ends.append(project(vadd(rscale(zz, s), ww)))
    g = Geodesic.between(ends[0], ends[1], tol=max(tol, 1e-7))
    tz, tw = g.parameter(z), g.parameter(w)
    if tw < tz:
        g = Geodesic.between(ends[1], ends[0], tol=max(tol, 1e-7))
        tz, tw = g.parameter(z), g.parameter(w)
    return g, tz, tw


def rho_via_crossratio(z: Point, w: Point, g: Geodesic, tol: float = 1e-7) -> float:
    """Distance between two points of ``g`` from the cross-ratio ``X(z, u, w, v)``."""
    for p in (z, w):
        if dist_point_geodesic(g, p) > math.sqrt(tol):
            raise GeometryError(f"{p!r} does not lie on the geodesic")
    # on lifts, so that z = w is allowed (X = 2)
    x = cross_ratio_lifts(standard_lift(z), g.lift_u, standard_lift(w), g.lift_v)
    return abs(math.log(abs(x - 1.0)))


def _eta_std(u: Point, v: Point, z: Point) -> Quaternion:
    return eta_lifts(standard_lift(u), standard_lift(v), standard_lift(z))


def dist_point_geodesic(g: Geodesic, z: Point, tol: float = EPS) -> float:
    """Distance from an interior point to the geodesic ``g``."""
    _require_interior(z, tol)
    e = _eta_std(g.u, g.v, z)
    return _rho(abs(e) + e[0])


def dist_point_qline(u: Point, v: Point, z: Point, tol: float = EPS) -> float:
    """Distance from interior ``z`` to the quaternionic line through boundary ``u``, ``v``."""
    _require_boundary(u, tol)
    _require_boundary(v, tol)
    _require_interior(z, tol)
    return _rho(2.0 * _eta_std(u, v, z)[0])


def _mixed_terms(u: Point, v: Point, z: Point, tol: float) -> tuple[Quaternion, float]:
    _require_boundary(u, tol)
    _require_interior(v, tol)
    _require_interior(z, tol)
    uu, vv, zz = standard_lift(u), standard_lift(v), standard_lift(z)
    x = eta_lifts(uu, vv, zz)
    corr = inner(uu, zz).norm2() * form(vv) / (inner(uu, vv).norm2() * form(zz))
    return x, corr


def dist_point_qline_mixed(u: Point, v: Point, z: Point, tol: float = EPS) -> float:
    """Distance from ``z`` to the quaternionic line through boundary ``u`` and interior ``v``."""
    x, corr = _mixed_terms(u, v, z, tol)
    return _rho(2.0 * x[0] - corr)


def dist_point_geodesic_mixed(u: Point, v: Point, z: Point, tol: float = EPS) -> float:
    """Distance from ``z`` to the geodesic ray from boundary ``u`` through interior ``v``."""
    x, corr = _mixed_terms(u, v, z, tol)
    m = x - 0.5 * corr
    return _rho(abs(m) + m[0])


def distance_to_qline(a: Point, b: Point, z: Point, tol: float = EPS) -> float:
    """Distance from interior ``z`` to the quaternionic line through ``a`` and ``b``.

    Dispatches on which of ``a``, ``b`` are boundary points.
    """
    ba, bb = is_boundary(a, tol), is_boundary(b, tol)
    if ba and bb:
        return dist_point_qline(a, b, z, tol)
    if ba:
        return dist_point_qline_mixed(a, b, z, tol)
    if bb:
        return dist_point_qline_mixed(b, a, z, tol)
    g, _, _ = geodesic_through(a, b, tol)
    return dist_point_qline(g.u, g.v, z, tol)


def distance_to_geodesic(a: Point, b: Point, z: Point, tol: float = EPS) -> float:
    """Distance from interior ``z`` to the complete geodesic through ``a`` and ``b``."""
    ba, bb = is_boundary(a, tol), is_boundary(b, tol)
    if ba and bb:
        return dist_point_geodesic(Geodesic.between(a, b, tol), z, tol)
    if ba:
        return dist_point_geodesic_mixed(a, b, z, tol)
    if bb:
        return dist_point_geodesic_mixed(b, a, z, tol)
    g, _, _ = geodesic_through(a, b, tol)
    return dist_point_geodesic(g, z, tol)


def project_to_geodesic(g: Geodesic, z: Point, tol: float = EPS) -> Point:
    """Nearest point of ``g`` to the interior point ``z``."""
    _require_interior(z, tol)
    return geodesic_point(g, g.parameter(z))


# ---------------------------------------------------------------------------
# moving configurations into normal position


def axis_translation(p: Point) -> Matrix:
    """Heisenberg translation taking a finite point to ``(d / 2, 0, ..., 0)``.

    ``d`` is the boundary defect of ``p``; boundary points go to ``o``.
    """
    z = p.coords
    c = tuple(-q for q in z[1:])
    return heisenberg_translation(c, -z[0].imag, p.n)


def to_zero_infinity(u: Point, v: Point, tol: float = EPS) -> Matrix:
    """Isometry sending distinct boundary points ``u -> o`` and ``v -> infinity``."""
    _require_boundary(u, tol)
    _require_boundary(v, tol)
    n = u.n
    swap = form_matrix(n)
    g = identity(n + 1)

    def step(h):
        nonlocal g, u, v
        g = matmul(h, g)
        u = apply(h, u, check=False)
        v = apply(h, v, check=False)

    if u.is_infinity:
        step(swap)
    if not _at_origin(u):
        step(axis_translation(u))
    if v.is_infinity:
        return g
    step(swap)                    # o -> infinity, v -> finite
    step(axis_translation(v))     # v -> o, infinity fixed
    step(swap)
    return g


def _at_origin(p: Point, tol: float = 1e-14) -> bool:
    return p.coords is not None and all(abs(q) <= tol for q in p.coords)


def to_zero_and_base(u: Point, z: Point, tol: float = EPS) -> Matrix:
    """Isometry sending boundary ``u -> o`` and interior ``z -> (-1, 0, ..., 0)``."""
    _require_boundary(u, tol)
    _require_interior(z, tol)
    n = u.n
    swap = form_matrix(n)
    g = identity(n + 1)

    def step(h):
        nonlocal g, u, z
        g = matmul(h, g)
        u = apply(h, u, check=False)
        z = apply(h, z, check=False)

    if not u.is_infinity:
        if not _at_origin(u):
            step(axis_translation(u))
        step(swap)
    step(axis_translation(z))
    step(dilation(1.0 / math.sqrt(-z.coords[0][0]), n))
    step(swap)
    return g


def to_base_pair(z: Point, w: Point, tol: float = EPS) -> tuple[Matrix, float]:
    """Isometry with ``z -> (-1, 0, ..)`` and ``w -> (-e^t, 0, ..)``, ``t = rho(z, w)``."""
    g_line, _, _ = geodesic_through(z, w, tol)
    g = to_zero_infinity(g_line.v, g_line.u, tol=max(tol, 1e-7))
    z1 = apply(g, z, check=False)
    s = -z1.coords[0][0]
    g = matmul(dilation(1.0 / math.sqrt(s), z.n), g)
    w1 = apply(g, w, check=False)
    return g, math.log(-w1.coords[0][0])


def project_to_qline(u: Point, v: Point, z: Point, tol: float = EPS) -> Point:
    """Orthogonal projection of ``z`` onto the quaternionic line through boundary ``u``, ``v``."""
    g = to_zero_infinity(u, v, tol)
    r = apply(g, z, check=False)
    if r.is_infinity:
        return v
    flat = Point(r.n, (r.coords[0],) + tuple(ZERO for _ in r.coords[1:]))
    return apply(inverse(g), flat, check=False)
