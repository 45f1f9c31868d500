"""Three ways to measure the same distance, and the Cartan invariant as a distance."""

import math

from qhyper import Point, bergman_distance, cartan
from qhyper.metric import Geodesic, dist_point_geodesic, dist_point_qline, project_to_qline, rho_via_crossratio
from qhyper.sampling import default_rng, random_boundary_point, random_interior_point

o, inf = Point.origin(2), Point.infinity(2)
axis = Geodesic.between(inf, o)
z, w = Point.of(-1, 0), Point.of(-2, 0)

print("distance between (-1, 0) and (-2, 0)")
print(f"  Bergman formula   {bergman_distance(z, w):.15f}")
print(f"  cross-ratio       {rho_via_crossratio(z, w, axis):.15f}")
print(f"  arc length        {abs(axis.parameter(w) - axis.parameter(z)):.15f}")
print(f"  log 2             {math.log(2):.15f}")

rng = default_rng(1)
u, v = random_boundary_point(2, rng), random_boundary_point(2, rng)
r = random_interior_point(2, rng)
foot = project_to_qline(u, v, r)
print("\nrandom u, v on the boundary and r inside")
print(f"  tan A(u, v, r)                        {math.tan(cartan(u, v, r)):.12f}")
print(f"  sinh(distance from the foot to (u v)) {math.sinh(dist_point_geodesic(Geodesic.between(u, v), foot)):.12f}")
print(f"  distance to the geodesic {dist_point_geodesic(Geodesic.between(u, v), r):.6f} "
      f">= distance to the line {dist_point_qline(u, v, r):.6f}")
