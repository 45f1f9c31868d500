"""Two boundary quadruples that share every cross-ratio class and Cartan invariant
but are not congruent.

Fix o and infinity, take r, s on the boundary and negate the k-components of
their first coordinates.  The second coordinates are then adjusted so that all
pairings keep their moduli.  The three cross-ratios stay similar (each is the
image of the original under the reflection k -> -k, an anti-automorphism that
preserves real part and modulus), yet the moduli points differ because the
reflection is not induced by an isometry.
"""

from qhyper import Point, Quaternion, tau
from qhyper.congruence import congruent_quadruple_gram, congruent_quadruple_invariants, quadruple_invariants
from qhyper.sampling import default_rng, random_boundary_point


def mirror(q):
    return Quaternion(q[0], q[1], q[2], -q[3])


rng = default_rng(2)
o, inf = Point.origin(2), Point.infinity(2)
r, s = random_boundary_point(2, rng), random_boundary_point(2, rng)
(r1, r2), (s1, s2) = r.coords, s.coords
w2 = mirror(s2.conj() * r2 * (1 / abs(r2))).conj()
p = (o, inf, r, s)
q = (o, inf, Point.of(mirror(r1), abs(r2)), Point.of(mirror(s1), w2))

ip, iq = quadruple_invariants(p), quadruple_invariants(q)
for key in ip:
    a, b = ip[key], iq[key]
    if isinstance(a, float):
        print(f"{key:12s} {a:.12f}  {b:.12f}")
    else:
        print(f"{key:12s} Re {a[0]:+.12f} |.| {abs(a):.12f}   Re {b[0]:+.12f} |.| {abs(b):.12f}")

print("\ninvariant test says congruent:", congruent_quadruple_invariants(p, q))
print("Gram test says congruent:     ", congruent_quadruple_gram(p, q))
print("moduli points:\n ", tau(*p), "\n ", tau(*q))
