"""Deciding when two ordered configurations differ by an isometry.

Triples of distinct points of the closure are decided from a short list of
invariants that depends on how many points lie on the boundary.  Boundary
points are moved to the front first; applying the same permutation to both
triples does not change the answer.

Alongside the invariant test there is a constructive check: both triples are
moved to a standard position and the remaining freedom (the stabilizer of
``o`` and infinity) is searched directly.  It returns a witness isometry.

Boundary quadruples are compared through their moduli points, or through
cross-ratio similarity classes and Cartan invariants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import GeometryError
from .hermitian import (
    EPS,
    Matrix,
    Point,
    apply,
    bergman_distance,
    block_diag_iso,
    identity,
    inverse,
    is_isometry,
    kind,
    matmul,
    points_close,
)
from .invariants import _distinct, cartan, cross_ratio
from .metric import distance_to_qline, to_base_pair, to_zero_and_base, to_zero_infinity
from .moduli import tau
from .qlinalg import householder_map, norm
from .quaternion import conjugator, similar

TOL = 1e-7

PATTERNS = {
    ("boundary", "boundary", "boundary"): "BBB",
    ("boundary", "boundary", "interior"): "BBH",
    ("boundary", "interior", "interior"): "BHH",
    ("interior", "interior", "interior"): "HHH",
}


@dataclass(frozen=True)
class TripleSignature:
    pattern: tuple[str, str, str]
    case: str
    invariants: dict = field(compare=False)


@dataclass(frozen=True)
class TripleVerdict:
    congruent: bool
    reason: str | None
    case: str | None
    p: TripleSignature | None = None
    q: TripleSignature | None = None


def pattern(points, tol: float = EPS) -> tuple[str, ...]:
    kinds = tuple(kind(p, tol) for p in points)
    if "exterior" in kinds:
        raise GeometryError("points must lie in the closure of hyperbolic space")
    return kinds


def canonical_order(kinds) -> tuple[int, ...]:
    """Permutation putting boundary points first, stable otherwise."""
    return tuple(sorted(range(len(kinds)), key=lambda i: kinds[i] != "boundary"))


def signature(p, tol: float = EPS, interior_line_variant: bool = False) -> TripleSignature:
    """Pattern and case invariants of a triple already in canonical order."""
    p1, p2, p3 = p
    pat = pattern(p, tol)
    case = PATTERNS[pat]
    if case == "BBB":
        inv = {"cartan": cartan(p1, p2, p3)}
    elif case == "BBH":
        inv = {"cartan": cartan(p1, p2, p3), "line_12_3": distance_to_qline(p1, p2, p3, tol)}
    elif case == "BHH":
        inv = {
            "line_12_3": distance_to_qline(p1, p2, p3, tol),
            "line_13_2": distance_to_qline(p1, p3, p2, tol),
            "dist_23": bergman_distance(p2, p3, tol),
        }
    else:
        first = (
            {"line_13_2": distance_to_qline(p1, p3, p2, tol)}
            if interior_line_variant
            else {"cartan": cartan(p1, p2, p3)}
        )
        inv = {
            **first,
            "dist_12": bergman_distance(p1, p2, tol),
            "dist_13": bergman_distance(p1, p3, tol),
            "dist_23": bergman_distance(p2, p3, tol),
        }
    return TripleSignature(pat, case, inv)


def _close(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))


def triple_verdict(p, q, tol: float = TOL, point_tol: float = EPS, interior_line_variant: bool = False) -> TripleVerdict:
    """Invariant-based decision for ordered triples, with the reason for a negative answer."""
    p, q = tuple(p), tuple(q)
    if len(p) != 3 or len(q) != 3:
        raise GeometryError("expected two triples")
    _distinct(p, point_tol)
    _distinct(q, point_tol)
    kp, kq = pattern(p, point_tol), pattern(q, point_tol)
    if kp != kq:
        return TripleVerdict(False, "pattern_mismatch", None)
    order = canonical_order(kp)
    p = tuple(p[i] for i in order)
    q = tuple(q[i] for i in order)
    sp = signature(p, point_tol, interior_line_variant)
    sq = signature(q, point_tol, interior_line_variant)
    ok = all(_close(sp.invariants[k], sq.invariants[k], tol) for k in sp.invariants)
    return TripleVerdict(ok, None if ok else "invariant_mismatch", sp.case, sp, sq)


def congruent_triple(p, q, tol: float = TOL, point_tol: float = EPS) -> bool:
    return triple_verdict(p, q, tol, point_tol).congruent


# ---------------------------------------------------------------------------
# constructive side


def map_o_infty(z: Point, w: Point, tol: float = 1e-8, elliptic: bool = False) -> Matrix | None:
    """Element of the stabilizer of ``o`` and infinity sending ``z`` to ``w``, if any.

    Such an element is ``diag(k l, A, l / k)`` with ``k > 0``, ``l`` a unit and
    ``A`` unitary; it exists iff ``Re w1 = k^2 Re z1``, ``|w1| = k^2 |z1|`` and
    ``|w'|^2 = k^2 |z'|^2`` for one ``k``.  With ``elliptic`` set, ``k = 1``.
    """
    if z.is_infinity or w.is_infinity:
        raise GeometryError("map_o_infty needs finite points")
    n = z.n
    z1, w1 = z.coords[0], w.coords[0]
    zt, wt = z.coords[1:], w.coords[1:]
    nz1, nw1 = abs(z1), abs(w1)
    tz, tw = norm(zt) ** 2, norm(wt) ** 2
    scale = 1.0 + nz1 + nw1 + tz + tw
    if elliptic:
        k2 = 1.0
    elif nz1 > tol * scale and nw1 > tol * scale:
        k2 = nw1 / nz1
    elif tz > tol * scale and tw > tol * scale:
        k2 = tw / tz
    elif max(nz1, nw1, tz, tw) <= tol * scale:
        return identity(n + 1)
    else:
        return None
    checks = (
        (w1[0], k2 * z1[0]),
        (nw1, k2 * nz1),
        (tw, k2 * tz),
    )
    if any(abs(a - b) > tol * scale * max(1.0, k2) for a, b in checks):
        return None
    k = math.sqrt(k2)
    lam = conjugator(z1 * k2, w1, tol)
    a = householder_map(zt, tuple(x * lam * (1.0 / k) for x in wt))
    h = block_diag_iso(lam * k, a, n)
    if not points_close(apply(h, z, check=False), w, math.sqrt(tol)):
        return None
    return h


def _standardizer(first: Point, second: Point, case: str, tol: float) -> tuple[Matrix, float]:
    if case in ("BBB", "BBH"):
        return to_zero_infinity(first, second, tol), 0.0
    if case == "BHH":
        return to_zero_and_base(first, second, tol), 0.0
    return to_base_pair(first, second, tol)


def triple_witness(p, q, tol: float = 1e-7, point_tol: float = EPS) -> Matrix | None:
    """Isometry ``h`` with ``h(p_i) = q_i`` found by normal forms, or ``None``."""
    p, q = tuple(p), tuple(q)
    _distinct(p, point_tol)
    _distinct(q, point_tol)
    kp, kq = pattern(p, point_tol), pattern(q, point_tol)
    if kp != kq:
        return None
    order = canonical_order(kp)
    pc = tuple(p[i] for i in order)
    qc = tuple(q[i] for i in order)
    case = PATTERNS[tuple(kp[i] for i in order)]
    f, tf = _standardizer(pc[0], pc[1], case, point_tol)
    g, tg = _standardizer(qc[0], qc[1], case, point_tol)
    if not _close(tf, tg, tol):
        return None
    z = apply(f, pc[2], check=False)
    w = apply(g, qc[2], check=False)
    h = map_o_infty(z, w, tol, elliptic=case in ("BHH", "HHH"))
    if h is None:
        return None
    witness = matmul(inverse(g), matmul(h, f))
    if not is_isometry(witness, 1e-6 * _size(witness)):
        return None
    if not all(points_close(apply(witness, a, check=False), b, 1e-6) for a, b in zip(p, q)):
        return None
    return witness


def _size(g: Matrix) -> float:
    return max(1.0, max(abs(x) for row in g for x in row) ** 2)


# ---------------------------------------------------------------------------
# quadruples


def congruent_quadruple_gram(p, q, tol: float = TOL, point_tol: float = EPS) -> bool:
    """Compare the moduli points (normalized Gram matrices) of two boundary quadruples."""
    mp = tau(*p, eps=point_tol)
    mq = tau(*q, eps=point_tol)
    scale = 1.0 + max(abs(x) for x in mp.as_tuple() + mq.as_tuple())
    return mp.distance(mq) <= tol * scale


def quadruple_invariants(p, point_tol: float = EPS) -> dict:
    p1, p2, p3, p4 = p
    return {
        "X(1,2,3,4)": cross_ratio(p1, p2, p3, p4, point_tol),
        "X(1,4,3,2)": cross_ratio(p1, p4, p3, p2, point_tol),
        "X(2,4,3,1)": cross_ratio(p2, p4, p3, p1, point_tol),
        "A(1,2,3)": cartan(p1, p2, p3, point_tol),
        "A(1,2,4)": cartan(p1, p2, p4, point_tol),
        "A(2,3,4)": cartan(p2, p3, p4, point_tol),
    }


def congruent_quadruple_invariants(p, q, tol: float = TOL, point_tol: float = EPS) -> bool:
    """Three cross-ratio similarity classes and three Cartan invariants agree."""
    for pts in (p, q):
        if len(pts) != 4 or not all(kind(x, point_tol) == "boundary" for x in pts):
            raise GeometryError("expected two quadruples of boundary points")
    ip = quadruple_invariants(p, point_tol)
    iq = quadruple_invariants(q, point_tol)
    for key in ip:
        a, b = ip[key], iq[key]
        if key.startswith("X"):
            if not similar(a, b, tol):
                return False
        elif not _close(a, b, tol):
            return False
    return True
