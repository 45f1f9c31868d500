"""Quaternionic cross-ratios, the triple product and the Cartan angular invariant.

Every product below is written in the exact factor order of its definition;
reordering factors changes the value since quaternions do not commute.  Only
the real part, the modulus and the similarity class of a cross-ratio are
geometric; the raw quaternion depends on the lifts used.
"""

from __future__ import annotations

import math
from itertools import combinations

from .errors import CoincidentPointsError, GeometryError, ZeroDivisorError
from .hermitian import EPS, Point, Vector, classify, form, inner, is_boundary, is_interior, standard_lift
from .quaternion import Quaternion, prod


def _distinct(points, tol):
    for a, b in combinations(points, 2):
        if a.n != b.n:
            raise GeometryError("points live in different dimensions")
        if a.is_infinity and b.is_infinity:
            raise CoincidentPointsError("repeated point at infinity")
        if a.is_infinity or b.is_infinity:
            continue
        d = sum((x - y).norm2() for x, y in zip(a.coords, b.coords))
        if d <= (tol * max(a.scale(), b.scale())) ** 2:
            raise CoincidentPointsError(f"{a!r} and {b!r} coincide")


def _inv(q: Quaternion, what: str) -> Quaternion:
    try:
        return q.inv()
    except ZeroDivisorError as exc:
        raise ZeroDivisorError(f"vanishing product {what}; points are not distinct or lifts invalid") from exc


def triple_product_lifts(z1: Vector, z2: Vector, z3: Vector) -> Quaternion:
    """``<z2, z1> <z3, z2> <z1, z3>``."""
    return inner(z2, z1) * inner(z3, z2) * inner(z1, z3)


def triple_product(p1: Point, p2: Point, p3: Point, tol: float = EPS) -> Quaternion:
    """Hermitian triple product of standard lifts; its real part is never positive."""
    _distinct((p1, p2, p3), tol)
    return triple_product_lifts(standard_lift(p1), standard_lift(p2), standard_lift(p3))


def cartan_from_product(t: Quaternion) -> float:
    """``arccos(-Re t / |t|)``, evaluated as an ``atan2`` so it stays accurate near 0."""
    if abs(t) == 0.0:
        raise CoincidentPointsError("triple product vanishes")
    # Re(t) <= 0 for valid triples; clamping -Re(t) at 0 keeps the angle in [0, pi/2]
    return math.atan2(t.imag_norm(), max(0.0, -t[0]))


def cartan_lifts(z1: Vector, z2: Vector, z3: Vector) -> float:
    return cartan_from_product(triple_product_lifts(z1, z2, z3))


def cartan(p1: Point, p2: Point, p3: Point, tol: float = EPS) -> float:
    """Quaternionic Cartan angular invariant in ``[0, pi/2]``."""
    return cartan_from_product(triple_product(p1, p2, p3, tol))


def cross_ratio_lifts(z1: Vector, z2: Vector, z3: Vector, z4: Vector) -> Quaternion:
    """``<z3,z1> <z3,z2>^-1 <z4,z2> <z4,z1>^-1`` for lifts in the closed negative cone.

    Rescaling lifts on the right by ``l1..l4`` conjugates the result:
    ``X(z1 l1, ...) = conj(l1) X conj(l1)^-1``.
    """
    for z in (z1, z2, z3, z4):
        if classify(z) == "positive":
            raise GeometryError("cross-ratio needs null or negative vectors")
    return prod(
        inner(z3, z1),
        _inv(inner(z3, z2), "<z3,z2>"),
        inner(z4, z2),
        _inv(inner(z4, z1), "<z4,z1>"),
    )


def cross_ratio(p1: Point, p2: Point, p3: Point, p4: Point, tol: float = EPS) -> Quaternion:
    """Cross-ratio of four distinct points, evaluated on their standard lifts."""
    _distinct((p1, p2, p3, p4), tol)
    return cross_ratio_lifts(*(standard_lift(p) for p in (p1, p2, p3, p4)))


def three_cross_ratios(z1: Vector, z2: Vector, z3: Vector, z4: Vector) -> tuple[Quaternion, Quaternion, Quaternion]:
    """``X(z1,z2,z3,z4)``, ``X(z2,z4,z3,z1)`` and ``X(z1,z4,z3,z2)``."""
    return (
        cross_ratio_lifts(z1, z2, z3, z4),
        cross_ratio_lifts(z2, z4, z3, z1),
        cross_ratio_lifts(z1, z4, z3, z2),
    )


def eta_lifts(u: Vector, v: Vector, z: Vector) -> Quaternion:
    """``<u,z> <u,v>^-1 <z,v> <z,z>^-1``."""
    return prod(
        inner(u, z),
        _inv(inner(u, v), "<u,v>"),
        inner(z, v),
        Quaternion(1.0 / form(z)),
    )


def eta(u: Point, v: Point, z: Point, tol: float = EPS) -> Quaternion:
    """Distance-to-line quaternion for boundary ``u != v`` and interior ``z``.

    Only ``Re`` and ``abs`` of the result are independent of the lifts; the
    value returned uses standard lifts.
    """
    if not (is_boundary(u, tol) and is_boundary(v, tol)):
        raise GeometryError("u and v must be boundary points")
    if not is_interior(z, tol):
        raise GeometryError("z must be an interior point")
    _distinct((u, v), tol)
    return eta_lifts(standard_lift(u), standard_lift(v), standard_lift(z))


def cyclic_product(p1: Point, p2: Point, p3: Point, p4: Point) -> Quaternion:
    """``X(p1,p2,p3,p4) X(p1,p3,p4,p2) X(p1,p4,p2,p3)``, a unit quaternion.

    In this order the ``<p4,p1>`` and ``<p2,p1>`` factors of neighbouring
    cross-ratios cancel, so the real part is ``cos 2A(p2,p3,p4)``.  The other
    multiplication order agrees only when the entries commute.
    """
    return prod(
        cross_ratio(p1, p2, p3, p4),
        cross_ratio(p1, p3, p4, p2),
        cross_ratio(p1, p4, p2, p3),
    )
