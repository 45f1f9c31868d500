import itertools
import math

import pytest
from hypothesis import given

from qhyper.congruence import (
    canonical_order,
    congruent_quadruple_gram,
    congruent_quadruple_invariants,
    congruent_triple,
    map_o_infty,
    triple_verdict,
    triple_witness,
)
from qhyper.errors import CoincidentPointsError, GeometryError
from qhyper.hermitian import Point, apply, dilation, is_isometry, points_close
from qhyper.invariants import cartan
from qhyper.quaternion import Quaternion
from qhyper.sampling import random_boundary_point, random_isometry, random_point, random_stabilizer

from conftest import dims, kinds, qclose, rng_from, seeds

O, INF = Point.origin(2), Point.infinity(2)
SQRT6 = math.sqrt(6)


def _mirror(q):
    return Quaternion(q[0], q[1], q[2], -q[3])


def mirror_pair(rng):
    """Boundary quadruples with matching invariants but different moduli points."""
    r, s = random_boundary_point(2, rng), random_boundary_point(2, rng)
    (r1, r2), (s1, s2) = r.coords, s.coords
    w2 = _mirror(s2.conj() * r2 * (1 / abs(r2))).conj()
    p = (O, INF, r, s)
    q = (O, INF, Point.of(_mirror(r1), abs(r2)), Point.of(_mirror(s1), w2))
    return p, q


# ---------------------------------------------------------------------------
# triples: examples


def test_pattern_mismatch_example():
    # same Cartan invariant on the boundary part, but one point is inside
    p = (O, INF, Point.of(-1, SQRT6 / 2))
    q = (O, INF, Point.of(-1, math.sqrt(2) * 1j))
    v = triple_verdict(p, q)
    assert not v.congruent and v.reason == "pattern_mismatch"


def test_invariant_mismatch_example():
    # the line distances agree, the Cartan invariants do not
    p = (O, Point.of(-1, 0), Point.of(-1 + 1j, SQRT6 / 2))
    q = (O, Point.of(-1, 0), Point.of(complex(-0.4, 0.2), math.sqrt(15) / 5))
    v = triple_verdict(p, q)
    assert not v.congruent
    assert v.reason == "invariant_mismatch"
    assert v.case == "BHH"
    assert triple_witness(p, q) is None


def test_triple_rejects_coincident_points():
    with pytest.raises(CoincidentPointsError):
        triple_verdict((O, O, INF), (O, INF, Point.of(-1, 0)))


def test_canonical_order_moves_boundary_points_first():
    assert canonical_order(("interior", "boundary", "interior")) == (1, 0, 2)
    assert canonical_order(("boundary", "interior", "boundary")) == (0, 2, 1)


# ---------------------------------------------------------------------------
# the stabilizer of o and infinity


def test_map_o_infty_dilation():
    h = map_o_infty(Point.of(-1, 1), Point.of(-4, 2))
    assert h is not None and is_isometry(h)
    d = dilation(2.0, 2)
    assert all(qclose(a, b) for ra, rb in zip(h, d) for a, b in zip(ra, rb))


def test_map_o_infty_identity_and_failures():
    z = Point.of(-1 + 1j, 0.5)
    h = map_o_infty(z, z)
    assert points_close(apply(h, z), z, 1e-12)
    assert map_o_infty(Point.of(-1, 1), Point.of(-4, 2), elliptic=True) is None
    assert map_o_infty(Point.of(-1, 0), Point.of(-1j, 0)) is None
    with pytest.raises(GeometryError):
        map_o_infty(INF, z)


@given(seeds, dims)
def test_map_o_infty_on_random_orbits(seed, n):
    rng = rng_from(seed)
    z = random_point(n, rng, "interior")
    g = random_stabilizer(n, rng)
    w = apply(g, z)
    h = map_o_infty(z, w)
    assert h is not None and points_close(apply(h, z), w, 1e-7)


# ---------------------------------------------------------------------------
# triples: properties


@given(seeds, dims, kinds, kinds, kinds)
def test_moved_triples_are_congruent(seed, n, k1, k2, k3):
    rng = rng_from(seed)
    p = tuple(random_point(n, rng, k) for k in (k1, k2, k3))
    g = random_isometry(n, rng)
    q = tuple(apply(g, x) for x in p)
    for perm in itertools.permutations(range(3)):
        pp, qq = tuple(p[i] for i in perm), tuple(q[i] for i in perm)
        assert congruent_triple(pp, qq)
        assert triple_verdict(pp, qq, interior_line_variant=True).congruent
    w = triple_witness(p, q)
    assert w is not None
    assert all(points_close(apply(w, a, check=False), b, 1e-6) for a, b in zip(p, q))


@given(seeds, dims, kinds, kinds, kinds)
def test_verdicts_agree_with_witness_search(seed, n, k1, k2, k3):
    rng = rng_from(seed)
    p = tuple(random_point(n, rng, k) for k in (k1, k2, k3))
    q = tuple(random_point(n, rng, k) for k in (k1, k2, k3))
    assert congruent_triple(p, q) == (triple_witness(p, q) is not None)


@given(seeds, dims)
def test_boundary_triples_with_equal_cartan_are_congruent(seed, n):
    # three boundary points are classified by the Cartan invariant alone
    rng = rng_from(seed)
    p = tuple(random_boundary_point(n, rng) for _ in range(3))
    a = cartan(*p)
    tail = [math.sqrt(2 * math.cos(a))] + [0.0] * (n - 2)
    q = (Point.origin(n), Point.infinity(n), Point.of(complex(-math.cos(a), math.sin(a)), *tail))
    assert cartan(*q) == pytest.approx(a, abs=1e-12)
    assert congruent_triple(p, q)
    assert triple_witness(p, q) is not None


def test_interior_line_variant_agrees_on_samples(rng):
    for _ in range(50):
        p = tuple(random_point(2, rng, "interior") for _ in range(3))
        g = random_isometry(2, rng)
        q = tuple(apply(g, x) for x in p)
        r = tuple(random_point(2, rng, "interior") for _ in range(3))
        for other in (q, r):
            assert triple_verdict(p, other).congruent == triple_verdict(p, other, interior_line_variant=True).congruent


# ---------------------------------------------------------------------------
# quadruples


@given(seeds, dims)
def test_moved_quadruples_are_congruent(seed, n):
    rng = rng_from(seed)
    p = tuple(random_boundary_point(n, rng) for _ in range(4))
    g = random_isometry(n, rng)
    q = tuple(apply(g, x) for x in p)
    assert congruent_quadruple_gram(p, q)
    assert congruent_quadruple_invariants(p, q)


@given(seeds, dims)
def test_perturbed_quadruples_are_not_congruent(seed, n):
    rng = rng_from(seed)
    p = tuple(random_boundary_point(n, rng) for _ in range(4))
    g = random_isometry(n, rng)
    q = [apply(g, x) for x in p]
    moved = list(p[:3]) + [random_boundary_point(n, rng)]
    assert not congruent_quadruple_gram(p, moved)
    assert not congruent_quadruple_invariants(p, moved)
    swapped = (q[0], q[1], q[3], q[2])
    assert not congruent_quadruple_gram(p, swapped)


def test_quadruple_invariants_need_boundary_points():
    p = (O, INF, Point.of(-0.5, 1), Point.of(1j, 0))
    with pytest.raises(GeometryError):
        congruent_quadruple_invariants(p[:3] + (Point.of(-1, 0),), p)


def test_mirror_quadruples_share_invariants_but_not_moduli(rng):
    for _ in range(5):
        p, q = mirror_pair(rng)
        assert congruent_quadruple_invariants(p, q)
        assert not congruent_quadruple_gram(p, q)
