"""Random points and isometries for tests, demos and the ``random`` command.

Isometries are built as products of generators that preserve the form
exactly (block-diagonal stabilizers of ``o`` and infinity, Heisenberg
translations and the swap ``J``), so sampled matrices never drift off the
group beyond rounding.
"""

from __future__ import annotations

import numpy as np

from .hermitian import (
    Matrix,
    Point,
    block_diag_iso,
    form_matrix,
    heisenberg_translation,
    identity,
    matmul,
)
from .qlinalg import random_unitary
from .quaternion import Quaternion


def default_rng(seed=None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_quaternion(rng, scale: float = 1.0) -> Quaternion:
    return Quaternion(*rng.uniform(-scale, scale, size=4))


def _random_tail_and_im(n, rng, box):
    tail = tuple(random_quaternion(rng, box) for _ in range(n - 1))
    im = rng.uniform(-box, box, size=3)
    return tail, im


def random_boundary_point(n: int, rng, box: float = 1.0) -> Point:
    """Point with ``Re z_1 = -|z'|^2 / 2`` and box-uniform remaining parts."""
    tail, im = _random_tail_and_im(n, rng, box)
    re = -0.5 * sum(q.norm2() for q in tail)
    return Point(n, (Quaternion(re, *im),) + tail)


def random_interior_point(n: int, rng, box: float = 1.0) -> Point:
    tail, im = _random_tail_and_im(n, rng, box)
    u = rng.uniform(0.1, 2.0)
    re = -0.5 * sum(q.norm2() for q in tail) - u
    return Point(n, (Quaternion(re, *im),) + tail)


def random_point(n: int, rng, kind: str, box: float = 1.0) -> Point:
    if kind == "boundary":
        return random_boundary_point(n, rng, box)
    if kind == "interior":
        return random_interior_point(n, rng, box)
    raise ValueError(f"unknown point kind {kind!r}")


def random_stabilizer(n: int, rng) -> Matrix:
    """``diag(mu, A, conj(mu)^-1)`` with random ``mu`` and unitary ``A``."""
    mu = Quaternion(*rng.normal(size=4))
    mu = mu * (rng.uniform(0.5, 2.0) / abs(mu))
    return block_diag_iso(mu, random_unitary(n - 1, rng), n)


def random_translation(n: int, rng, box: float = 1.0) -> Matrix:
    c = tuple(random_quaternion(rng, box) for _ in range(n - 1))
    im_b = Quaternion(0.0, *rng.uniform(-box, box, size=3))
    return heisenberg_translation(c, im_b, n)


def random_isometry(n: int, rng, length: int = 4) -> Matrix:
    """Random word in the generators of Sp(n, 1)."""
    g = identity(n + 1)
    swap = form_matrix(n)
    for _ in range(length):
        choice = rng.integers(3)
        if choice == 0:
            h = random_stabilizer(n, rng)
        elif choice == 1:
            h = random_translation(n, rng)
        else:
            h = swap
        g = matmul(h, g)
    # make sure both kinds of generators appear
    g = matmul(random_translation(n, rng), matmul(swap, matmul(random_stabilizer(n, rng), g)))
    return g
