"""The cyclic product of three cross-ratios is a unit quaternion whose real
part is cos 2A(p2, p3, p4).  Factor order matters: only the order in which
neighbouring factors telescope gives the Cartan invariant once the points
stop lying in a complex line."""

import math

from qhyper import Point, Quaternion, cartan, cross_ratio
from qhyper.invariants import cyclic_product
from qhyper.sampling import default_rng, random_boundary_point

o, inf = Point.origin(2), Point.infinity(2)


def other_order(p1, p2, p3, p4):
    return cross_ratio(p1, p2, p3, p4) * cross_ratio(p1, p4, p2, p3) * cross_ratio(p1, p3, p4, p2)


def show(p, label):
    y, w = cyclic_product(*p), other_order(*p)
    print(label)
    print(f"  cos 2A(p2, p3, p4)       {math.cos(2 * cartan(*p[1:])):+.6f}")
    print(f"  telescoping order: Re Y  {y[0]:+.6f}   |Y| = {abs(y):.15f}")
    print(f"  other order:       Re Y  {w[0]:+.6f}   |Y| = {abs(w):.15f}")


show((o, inf, Point.of(-0.5 + 1j, 1), Point.of(-0.5 + 0.3j, 1j)), "complex example")
show((o, inf, Point.of(Quaternion(-0.5, 1), 1), Point.of(Quaternion(-0.5, 0, 1), Quaternion(0, 0, 0, 1))),
     "quaternionic example")

rng = default_rng(0)
worst = [0.0, 0.0]
for _ in range(500):
    p = [random_boundary_point(2, rng) for _ in range(4)]
    target = math.cos(2 * cartan(*p[1:]))
    worst[0] = max(worst[0], abs(cyclic_product(*p)[0] - target))
    worst[1] = max(worst[1], abs(other_order(*p)[0] - target))
print(f"\nworst |Re Y - cos 2A| over 500 random quadruples: {worst[0]:.1e} (telescoping), {worst[1]:.2f} (other)")
