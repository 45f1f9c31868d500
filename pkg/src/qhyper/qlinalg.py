"""Small dense linear algebra over the quaternions (right vector spaces).

The positive-definite product used here is the standard one,
``(x, y) = y* x = sum conj(y_i) x_i``, under which unitary matrices
(``A* A = I``) form the compact group Sp(m).
"""

from __future__ import annotations

import math

import numpy as np

from .hermitian import Matrix, Vector, adjoint, identity, matmul, rscale, vsub
from .quaternion import ONE, ZERO, Quaternion


def dot(x: Vector, y: Vector) -> Quaternion:
    """``y* x``."""
    acc = ZERO
    for a, b in zip(x, y):
        acc = acc + b.conj() * a
    return acc


def norm(x: Vector) -> float:
    return math.sqrt(sum(q.norm2() for q in x))


def gram_schmidt(columns: list[Vector], tol: float = 1e-12) -> list[Vector]:
    """Orthonormalize columns left to right, dropping dependent ones.

    Coefficients act on the right: ``x - e (e* x)``.  Two passes are made per
    column to keep the result orthonormal to working precision.
    """
    basis: list[Vector] = []
    for col in columns:
        v = col
        for _ in range(2):
            for e in basis:
                v = vsub(v, rscale(e, dot(v, e)))
        nv = norm(v)
        if nv > tol * max(1.0, norm(col)):
            basis.append(rscale(v, 1.0 / nv))
    return basis


def complete_basis(vectors: list[Vector], size: int, rng=None) -> list[Vector]:
    """Extend an orthonormal list to an orthonormal basis of H^size."""
    basis = list(vectors)
    candidates = []
    for k in range(size):
        candidates.append(tuple(ONE if i == k else ZERO for i in range(size)))
    if rng is not None:
        rng.shuffle(candidates)
    for c in candidates:
        if len(basis) == size:
            break
        basis = gram_schmidt(basis + [c])
    return basis


def from_columns(cols: list[Vector]) -> Matrix:
    return tuple(tuple(col[i] for col in cols) for i in range(len(cols[0])))


def random_unitary(size: int, rng) -> Matrix:
    """Element of Sp(size) from Gram-Schmidt on a random Gaussian matrix."""
    while True:
        cols = [tuple(Quaternion(*rng.normal(size=4)) for _ in range(size)) for _ in range(size)]
        basis = gram_schmidt(cols)
        if len(basis) == size:
            return from_columns(basis)


def unitary_defect(a: Matrix) -> float:
    m = matmul(adjoint(a), a)
    eye = identity(len(a))
    return max(abs(m[i][j] - eye[i][j]) for i in range(len(a)) for j in range(len(a)))


def householder_map(x: Vector, y: Vector, tol: float = 1e-12) -> Matrix:
    """Unitary ``A`` with ``A x = y`` for vectors of equal length.

    First a unit right-phase on the line of ``x`` makes ``y* x`` real and
    non-negative, then a Householder reflection swaps the two vectors.
    """
    size = len(x)
    nx = norm(x)
    if nx <= tol:
        return identity(size)
    xh = rscale(x, 1.0 / nx)
    c = dot(x, y)
    phase = ONE if abs(c) <= tol * nx * nx else c.conj() / abs(c)
    # U1 = I + xh (phase - 1) xh*
    u1 = _outer_update(identity(size), xh, phase - ONE, xh)
    x1 = rscale(x, phase)
    v = vsub(x1, y)
    nv = norm(v)
    if nv <= tol * nx:
        return u1
    # H = I - 2 v v* / |v|^2 maps x1 to y because y* x1 is real
    h = _outer_update(identity(size), v, Quaternion(-2.0 / (nv * nv)), v)
    return matmul(h, u1)


def _outer_update(a: Matrix, u: Vector, s: Quaternion, w: Vector) -> Matrix:
    """``A + u s w*``."""
    return tuple(
        tuple(a[i][j] + u[i] * s * w[j].conj() for j in range(len(w)))
        for i in range(len(u))
    )


def map_pair(x1: Vector, x2: Vector, y1: Vector, y2: Vector, tol: float = 1e-9) -> Matrix | None:
    """Unitary ``A`` with ``A x1 = y1`` and ``A x2 = y2`` or ``None``.

    Exists iff the 2x2 Gram matrices of ``(x1, x2)`` and ``(y1, y2)`` agree.
    """
    size = len(x1)
    gx = [[dot(a, b) for b in (x1, x2)] for a in (x1, x2)]
    gy = [[dot(a, b) for b in (y1, y2)] for a in (y1, y2)]
    scale = max(1.0, norm(x1) ** 2, norm(x2) ** 2, norm(y1) ** 2, norm(y2) ** 2)
    for i in range(2):
        for j in range(2):
            if abs(gx[i][j] - gy[i][j]) > tol * scale:
                return None
    if norm(x1) <= tol and norm(y1) <= tol:
        return householder_map(x2, y2)
    ex = gram_schmidt([x1, x2])
    ey = gram_schmidt([y1, y2])
    if len(ex) != len(ey):
        return None
    bx = complete_basis(ex, size)
    by = complete_basis(ey, size)
    return matmul(from_columns(by), adjoint(from_columns(bx)))


# realification -------------------------------------------------------------


def realify_columns(cols: list[Vector]) -> np.ndarray:
    """Real matrix whose columns span the right H-span of ``cols``.

    Each quaternion column ``v`` contributes ``v*1, v*i, v*j, v*k`` as four real
    columns of length ``4 * len(v)``.
    """
    blocks = []
    for v in cols:
        for unit in (ONE, Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)):
            blocks.append(np.concatenate([np.array(q * unit) for q in v]))
    return np.column_stack(blocks)


def right_rank(cols: list[Vector], rel_tol: float = 1e-8) -> int:
    """Dimension over H of the right span of the columns."""
    s = np.linalg.svd(realify_columns(cols), compute_uv=False)
    if s[0] == 0.0:
        return 0
    real_rank = int(np.sum(s > rel_tol * s[0]))
    return real_rank // 4


def right_dependent(cols: list[Vector], rel_tol: float = 1e-8) -> bool:
    return right_rank(cols, rel_tol) < len(cols)
