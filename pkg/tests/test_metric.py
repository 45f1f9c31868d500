import math

import pytest
from hypothesis import given

from qhyper.errors import GeometryError
from qhyper.hermitian import Point, apply, bergman_distance, is_boundary, is_interior, is_isometry, points_close
from qhyper.invariants import cartan
from qhyper.metric import (
    Geodesic,
    dist_point_geodesic,
    dist_point_geodesic_mixed,
    dist_point_qline,
    dist_point_qline_mixed,
    distance_to_geodesic,
    distance_to_qline,
    geodesic_point,
    geodesic_through,
    project_to_geodesic,
    project_to_qline,
    rho_via_crossratio,
    to_base_pair,
    to_zero_and_base,
    to_zero_infinity,
)
from qhyper.sampling import random_boundary_point, random_interior_point, random_isometry, random_point

from conftest import SQRT2, dims, kinds, rng_from, seeds

O, INF = Point.origin(2), Point.infinity(2)
GAMMA = Geodesic.between(INF, O)  # t -> +inf runs towards infinity


def cosh2_half(rho):
    return math.cosh(rho / 2) ** 2


# ---------------------------------------------------------------------------
# geodesics and the log 2 example


def test_geodesic_points():
    assert points_close(geodesic_point(GAMMA, 0.0), Point.of(-1, 0), 1e-15)
    assert points_close(geodesic_point(GAMMA, math.log(2)), Point.of(-2, 0), 1e-15)


def test_log2_three_ways():
    z, w = Point.of(-1, 0), Point.of(-2, 0)
    bergman = bergman_distance(z, w)
    cross = rho_via_crossratio(z, w, GAMMA)
    arc = abs(GAMMA.parameter(w) - GAMMA.parameter(z))
    for value in (bergman, cross, arc):
        assert value == pytest.approx(math.log(2), abs=1e-12)
    assert cosh2_half(bergman) == pytest.approx(9 / 8)


def test_crossratio_distance_of_a_point_to_itself():
    z = Point.of(-1, 0)
    assert rho_via_crossratio(z, z, GAMMA) == pytest.approx(0.0, abs=1e-15)


def test_crossratio_distance_needs_points_on_the_geodesic():
    with pytest.raises(GeometryError):
        rho_via_crossratio(Point.of(-1, 0), Point.of(-1, 1), GAMMA)


@given(seeds, dims)
def test_arc_length_parametrization(seed, n):
    rng = rng_from(seed)
    g = Geodesic.between(random_boundary_point(n, rng), random_boundary_point(n, rng))
    t, k = rng.uniform(-3, 3, size=2)
    z, w = geodesic_point(g, t), geodesic_point(g, k)
    assert bergman_distance(z, w) == pytest.approx(abs(t - k), abs=1e-8)
    assert g.parameter(z) == pytest.approx(t, abs=1e-8)
    if abs(t - k) > 1e-3:
        assert rho_via_crossratio(z, w, g) == pytest.approx(abs(t - k), abs=1e-8)


@given(seeds, dims)
def test_geodesic_through_two_points(seed, n):
    rng = rng_from(seed)
    z, w = random_interior_point(n, rng), random_interior_point(n, rng)
    g, tz, tw = geodesic_through(z, w)
    assert tz < tw
    assert dist_point_geodesic(g, z) == pytest.approx(0.0, abs=1e-6)
    assert dist_point_geodesic(g, w) == pytest.approx(0.0, abs=1e-6)
    assert tw - tz == pytest.approx(bergman_distance(z, w), abs=1e-8)


# ---------------------------------------------------------------------------
# distances to geodesics and quaternionic lines


def test_distance_to_geodesic_examples():
    assert dist_point_geodesic(GAMMA, Point.of(-1, 0)) == pytest.approx(0.0, abs=1e-7)
    rho = dist_point_geodesic(GAMMA, Point.of(-1 + 1j, 0))
    assert cosh2_half(rho) == pytest.approx((SQRT2 + 1) / 2, rel=1e-12)


def test_distance_to_line_examples():
    rho = dist_point_qline(O, INF, Point.of(-1, 1))
    assert cosh2_half(rho) == pytest.approx(2.0, rel=1e-12)
    assert rho == pytest.approx(2 * math.acosh(SQRT2), rel=1e-12)
    assert dist_point_qline(O, INF, Point.of(-1, 0)) == 0.0


def test_mixed_formula_examples():
    v, z = Point.of(-1, 0), Point.of(-1, 1)
    assert cosh2_half(dist_point_qline_mixed(INF, v, z)) == pytest.approx(2.0, rel=1e-12)
    assert dist_point_qline_mixed(INF, v, z) == pytest.approx(dist_point_qline(O, INF, z), abs=1e-12)
    assert dist_point_qline_mixed(INF, v, v) == 0.0
    assert dist_point_geodesic_mixed(INF, v, v) == 0.0


def test_distance_preconditions():
    with pytest.raises(GeometryError):
        dist_point_geodesic(GAMMA, O)
    with pytest.raises(GeometryError):
        dist_point_qline_mixed(Point.of(-1, 0), Point.of(-2, 0), Point.of(-1, 1))
    with pytest.raises(GeometryError):
        dist_point_geodesic_mixed(INF, O, Point.of(-1, 1))


@given(seeds, dims)
def test_mixed_formulas_match_boundary_pair_formulas(seed, n):
    rng = rng_from(seed)
    u, w = random_boundary_point(n, rng), random_boundary_point(n, rng)
    g = Geodesic.between(u, w)
    v = geodesic_point(g, rng.uniform(-2, 2))
    z = random_interior_point(n, rng)
    assert dist_point_qline_mixed(u, v, z) == pytest.approx(dist_point_qline(u, w, z), abs=1e-8)
    assert dist_point_geodesic_mixed(u, v, z) == pytest.approx(dist_point_geodesic(g, z), abs=1e-8)


@given(seeds, dims)
def test_line_is_closer_than_geodesic(seed, n):
    rng = rng_from(seed)
    u, v = random_boundary_point(n, rng), random_boundary_point(n, rng)
    z = random_interior_point(n, rng)
    assert dist_point_qline(u, v, z) <= dist_point_geodesic(Geodesic.between(u, v), z) + 1e-10


@given(seeds, dims, kinds, kinds)
def test_distances_are_invariant(seed, n, ka, kb):
    rng = rng_from(seed)
    a, b = random_point(n, rng, ka), random_point(n, rng, kb)
    z = random_interior_point(n, rng)
    g = random_isometry(n, rng)
    ga, gb, gz = apply(g, a), apply(g, b), apply(g, z)
    assert distance_to_qline(ga, gb, gz) == pytest.approx(distance_to_qline(a, b, z), abs=1e-8, rel=1e-8)
    assert distance_to_geodesic(ga, gb, gz) == pytest.approx(distance_to_geodesic(a, b, z), abs=1e-8, rel=1e-8)


@given(seeds, dims)
def test_dispatch_for_two_interior_points(seed, n):
    rng = rng_from(seed)
    a, b, z = (random_interior_point(n, rng) for _ in range(3))
    g, _, _ = geodesic_through(a, b)
    assert distance_to_geodesic(a, b, z) == pytest.approx(dist_point_geodesic(g, z), abs=1e-12)
    assert distance_to_qline(a, b, z) == pytest.approx(dist_point_qline(g.u, g.v, z), abs=1e-12)


# ---------------------------------------------------------------------------
# projections


def test_projection_example():
    r = Point.of(-1 + 1j, 1)
    assert points_close(project_to_geodesic(GAMMA, r), Point.of(-SQRT2, 0), 1e-12)
    assert points_close(project_to_qline(O, INF, r), Point.of(-1 + 1j, 0), 1e-12)


def test_projection_fixes_points_on_the_geodesic():
    z = Point.of(-3, 0)
    assert points_close(project_to_geodesic(GAMMA, z), z, 1e-12)


@given(seeds, dims)
def test_projection_is_nearest(seed, n):
    rng = rng_from(seed)
    g = Geodesic.between(random_boundary_point(n, rng), random_boundary_point(n, rng))
    z = random_interior_point(n, rng)
    t = g.parameter(z)
    best = bergman_distance(z, project_to_geodesic(g, z))
    assert best == pytest.approx(dist_point_geodesic(g, z), abs=1e-7)
    for dt in (-1e-3, 1e-3):
        assert bergman_distance(z, geodesic_point(g, t + dt)) > best


# ---------------------------------------------------------------------------
# normal forms


@given(seeds, dims)
def test_normal_form_maps(seed, n):
    rng = rng_from(seed)
    u, v = random_boundary_point(n, rng), random_boundary_point(n, rng)
    z, w = random_interior_point(n, rng), random_interior_point(n, rng)
    o, base = Point.origin(n), Point.of(*([-1.0] + [0.0] * (n - 1)))

    f = to_zero_infinity(u, v)
    assert is_isometry(f, 1e-8)
    assert points_close(apply(f, u, check=False), o, 1e-8)
    assert points_close(apply(f, v, check=False), Point.infinity(n), 1e-7)

    f = to_zero_and_base(u, z)
    assert points_close(apply(f, u, check=False), o, 1e-7)
    assert points_close(apply(f, z, check=False), base, 1e-7)

    f, t = to_base_pair(z, w)
    assert t == pytest.approx(bergman_distance(z, w), abs=1e-8)
    assert points_close(apply(f, z, check=False), base, 1e-7)
    far = Point.of(*([-math.exp(t)] + [0.0] * (n - 1)))
    assert points_close(apply(f, w, check=False), far, 1e-7)


# ---------------------------------------------------------------------------
# Cartan invariant as a distance


def _angle_distance_parts(u, v, r):
    g = Geodesic.between(u, v)
    pr = project_to_qline(u, v, r)
    return g, pr


@given(seeds, dims, kinds)
def test_tan_cartan_is_sinh_of_distance_after_projection(seed, n, k):
    rng = rng_from(seed)
    u, v = random_boundary_point(n, rng), random_boundary_point(n, rng)
    r = random_point(n, rng, k)
    g, pr = _angle_distance_parts(u, v, r)
    if not is_interior(pr):
        return
    a = cartan(u, v, r)
    assert math.tan(a) == pytest.approx(math.sinh(dist_point_geodesic(g, pr)), rel=1e-7, abs=1e-7)
    if is_interior(r):
        assert points_close(project_to_geodesic(g, pr), project_to_geodesic(g, r), 1e-7)


@given(seeds, dims)
def test_cosh_factorization(seed, n):
    rng = rng_from(seed)
    u, v = random_boundary_point(n, rng), random_boundary_point(n, rng)
    r = random_interior_point(n, rng)
    g, pr = _angle_distance_parts(u, v, r)
    to_geo, to_line, inside = dist_point_geodesic(g, r), dist_point_qline(u, v, r), dist_point_geodesic(g, pr)
    assert math.cosh(to_geo / 2) == pytest.approx(math.cosh(to_line / 2) * math.cosh(inside / 2), rel=1e-7)
    tan_a = 2 * SQRT2 * math.cosh(to_geo / 2) * math.sqrt(max(0.0, math.cosh(to_geo) - math.cosh(to_line)))
    tan_a /= 1 + math.cosh(to_line)
    assert math.tan(cartan(u, v, r)) == pytest.approx(tan_a, rel=1e-7, abs=1e-7)
    assert is_boundary(u)
