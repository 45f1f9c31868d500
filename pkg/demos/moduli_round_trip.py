"""Normalize a boundary quadruple, rebuild it from its moduli point, compare."""

import math

from qhyper import ModuliPoint, d_of_g, is_in_moduli_space, reconstruct, tau
from qhyper.congruence import congruent_quadruple_gram
from qhyper.sampling import default_rng, random_boundary_point

# a point of the n = 2 surface
m = ModuliPoint(1 + 1j, -1 + 0j, 0j, 0.0, math.pi / 2)
print(f"D = {d_of_g(m):.2e}, member for n = 2: {is_in_moduli_space(m, 2)}")
for p in reconstruct(m, 2):
    print("  ", p)
print("recovered:", tau(*reconstruct(m, 2)))

off = ModuliPoint(1.1 + 1j, -1 + 0j, 0j, 0.0, math.pi / 2)
print(f"\nmoving c1 to 1.1+i gives D = {d_of_g(off):.4f}; member for n = 2 or 3: "
      f"{is_in_moduli_space(off, 2)}, {is_in_moduli_space(off, 3)}")

rng = default_rng(5)
for n in (2, 3):
    p = [random_boundary_point(n, rng) for _ in range(4)]
    k = tau(*p)
    q = reconstruct(k, n)
    print(f"\nn = {n}: D = {d_of_g(k):+.3e}, round trip error {tau(*q).distance(k):.1e}, "
          f"congruent to the original: {congruent_quadruple_gram(p, q)}")
