"""The quaternionic Hermitian space of signature (n, 1) in the Siegel model.

Vectors ("lifts") are tuples of :class:`~qhyper.quaternion.Quaternion` of
length ``n + 1``; scalars always act on the right, ``z * l``.  The form is

    <z, w> = w* J z = conj(w_1) z_{n+1} + sum_{i=2}^{n} conj(w_i) z_i + conj(w_{n+1}) z_1

so that ``<z l, w> = <z, w> l`` and ``<z, w m> = conj(m) <z, w>``.

Points of the closure of hyperbolic space are :class:`Point` objects: either
a finite coordinate tuple or the point at infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, GeometryError, PositiveVectorError
from .quaternion import EPS, ONE, ZERO, Quaternion

Vector = tuple[Quaternion, ...]
Matrix = tuple[tuple[Quaternion, ...], ...]


# ---------------------------------------------------------------------------
# vectors


def vector(*entries) -> Vector:
    return tuple(Quaternion.coerce(e) for e in entries)


def rscale(z: Vector, lam) -> Vector:
    """Right scalar multiple ``z * lam``."""
    lam = Quaternion.coerce(lam)
    return tuple(zi * lam for zi in z)


def vadd(z: Vector, w: Vector) -> Vector:
    return tuple(a + b for a, b in zip(z, w))


def vsub(z: Vector, w: Vector) -> Vector:
    return tuple(a - b for a, b in zip(z, w))


def vnorm2(z: Vector) -> float:
    """Euclidean squared norm of the coordinates (not the indefinite form)."""
    return sum(q.norm2() for q in z)


def inner(z: Vector, w: Vector) -> Quaternion:
    """The Hermitian form ``<z, w> = w* J z``."""
    if len(z) != len(w):
        raise DimensionError(f"length mismatch {len(z)} != {len(w)}")
    if len(z) < 3:
        raise DimensionError("need n >= 2, i.e. vectors of length >= 3")
    acc = w[0].conj() * z[-1] + w[-1].conj() * z[0]
    for wi, zi in zip(w[1:-1], z[1:-1]):
        acc = acc + wi.conj() * zi
    return acc


def form(z: Vector) -> float:
    """The real number ``<z, z>``."""
    acc = 2.0 * (z[0].conj() * z[-1])[0]
    for zi in z[1:-1]:
        acc += zi.norm2()
    return acc


def classify(z: Vector, tol: float = EPS) -> str:
    """``"negative"``, ``"null"`` or ``"positive"`` with a relative dead band."""
    val = form(z)
    band = tol * vnorm2(z)
    if val < -band:
        return "negative"
    if val > band:
        return "positive"
    return "null"


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class Point:
    """A point of the closure of quaternionic hyperbolic n-space.

    ``coords`` is ``None`` for the point at infinity.
    """

    n: int
    coords: Vector | None = None

    def __post_init__(self):
        if self.n < 2:
            raise DimensionError("n must be at least 2")
        if self.coords is not None and len(self.coords) != self.n:
            raise DimensionError(f"expected {self.n} coordinates, got {len(self.coords)}")

    @classmethod
    def of(cls, *coords) -> "Point":
        c = vector(*coords)
        return cls(len(c), c)

    @classmethod
    def infinity(cls, n: int) -> "Point":
        return cls(n, None)

    @classmethod
    def origin(cls, n: int) -> "Point":
        return cls(n, tuple(ZERO for _ in range(n)))

    @property
    def is_infinity(self) -> bool:
        return self.coords is None

    def defect(self) -> float:
        """``2 Re(z_1) + sum_{i>=2} |z_i|^2``; zero on the boundary, negative inside."""
        if self.coords is None:
            return 0.0
        z = self.coords
        return 2.0 * z[0][0] + sum(q.norm2() for q in z[1:])

    def scale(self) -> float:
        if self.coords is None:
            return 1.0
        return 1.0 + vnorm2(self.coords)

    def __repr__(self):
        if self.coords is None:
            return f"Point.infinity({self.n})"
        return "Point.of({})".format(", ".join(str(q) for q in self.coords))


def kind(p: Point, tol: float = EPS) -> str:
    """``"boundary"``, ``"interior"`` or ``"exterior"``."""
    if p.is_infinity:
        return "boundary"
    d = p.defect()
    band = tol * p.scale()
    if abs(d) <= band:
        return "boundary"
    return "interior" if d < 0 else "exterior"


def is_boundary(p: Point, tol: float = EPS) -> bool:
    return kind(p, tol) == "boundary"


def is_interior(p: Point, tol: float = EPS) -> bool:
    return kind(p, tol) == "interior"


def standard_lift(p: Point) -> Vector:
    """``(z; 1)`` for finite points, ``(-1, 0, ..., 0)`` for infinity."""
    if p.coords is None:
        return (Quaternion(-1.0),) + tuple(ZERO for _ in range(p.n))
    return p.coords + (ONE,)


def project(z: Vector, tol: float = EPS) -> Point:
    """Right projectivization of a negative or null vector."""
    n = len(z) - 1
    if classify(z, tol) == "positive":
        raise PositiveVectorError(f"<z,z> = {form(z)!r} > 0")
    size = math.sqrt(vnorm2(z))
    if size == 0.0:
        raise GeometryError("zero vector has no projection")
    last = z[-1]
    if abs(last) <= tol * size:
        if all(abs(q) <= tol * size for q in z[1:]):
            return Point.infinity(n)
        raise GeometryError("projection undefined: last coordinate vanishes")
    d = last.inv()
    return Point(n, tuple(q * d for q in z[:-1]))


def points_close(p: Point, q: Point, tol: float = 1e-8) -> bool:
    if p.n != q.n:
        return False
    if p.is_infinity or q.is_infinity:
        if p.is_infinity and q.is_infinity:
            return True
        # compare through the lifts: proportional iff <p,q> ~ 0 for null ones
        finite = q if p.is_infinity else p
        return 1.0 / math.sqrt(vnorm2(finite.coords)) <= tol
    d = math.sqrt(sum((a - b).norm2() for a, b in zip(p.coords, q.coords)))
    return d <= tol * max(1.0, math.sqrt(vnorm2(p.coords)))


def bergman_distance(z: Point, w: Point, tol: float = EPS) -> float:
    """Bergman distance between interior points."""
    for p in (z, w):
        if not is_interior(p, tol):
            raise GeometryError(f"{p!r} is not an interior point")
    zz = standard_lift(z)
    ww = standard_lift(w)
    c = inner(zz, ww).norm2() / (form(zz) * form(ww))
    return 2.0 * math.acosh(math.sqrt(max(1.0, c)))


# ---------------------------------------------------------------------------
# matrices and isometries


def identity(size: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(size)) for i in range(size))


def form_matrix(n: int) -> Matrix:
    """The matrix ``J`` of the form; it is itself an element of Sp(n, 1)."""
    size = n + 1
    rows = []
    for i in range(size):
        row = []
        for j in range(size):
            if (i, j) in ((0, size - 1), (size - 1, 0)) or (i == j and 0 < i < size - 1):
                row.append(ONE)
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return tuple(rows)


def matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Quaternion.coerce(x) for x in row) for row in rows)


def matvec(g: Matrix, z: Vector) -> Vector:
    out = []
    for row in g:
        acc = ZERO
        for a, b in zip(row, z):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(_dot(row, col) for col in cols) for row in a)


def _dot(row, col) -> Quaternion:
    acc = ZERO
    for x, y in zip(row, col):
        acc = acc + x * y
    return acc


def adjoint(a: Matrix) -> Matrix:
    """Conjugate transpose."""
    return tuple(tuple(x.conj() for x in col) for col in zip(*a))


def block_diag_iso(mu: Quaternion, a: Matrix, n: int) -> Matrix:
    """``diag(mu, A, conj(mu)^-1)``, an element fixing ``o`` and infinity."""
    size = n + 1
    rows = [[ZERO] * size for _ in range(size)]
    rows[0][0] = mu
    rows[-1][-1] = mu.conj().inv()
    for i in range(n - 1):
        for j in range(n - 1):
            rows[i + 1][j + 1] = a[i][j]
    return tuple(tuple(r) for r in rows)


def heisenberg_translation(c: Vector, im_b: Quaternion, n: int) -> Matrix:
    """Translation fixing infinity: ``[[1, -c*, b], [0, I, c], [0, 0, 1]]``.

    ``b = -|c|^2 / 2 + im_b`` with ``im_b`` purely imaginary, which is the
    condition for the matrix to preserve the form.
    """
    size = n + 1
    b = Quaternion(-0.5 * vnorm2(c)) + im_b.imag
    rows = [[ONE if i == j else ZERO for j in range(size)] for i in range(size)]
    for k in range(n - 1):
        rows[0][k + 1] = -c[k].conj()
        rows[k + 1][-1] = c[k]
    rows[0][-1] = b
    return tuple(tuple(r) for r in rows)


def dilation(k: float, n: int) -> Matrix:
    """``diag(k, I, 1/k)``: moves ``(x, y)`` to ``(k^2 x, k y)``."""
    return block_diag_iso(Quaternion(k), identity(n - 1), n)


def inverse(g: Matrix) -> Matrix:
    """Inverse of an element of Sp(n,1): ``J g* J``."""
    n = len(g) - 1
    jm = form_matrix(n)
    return matmul(jm, matmul(adjoint(g), jm))


def isometry_defect(g: Matrix) -> float:
    """Largest entry of ``|g* J g - J|``."""
    n = len(g) - 1
    jm = form_matrix(n)
    m = matmul(adjoint(g), matmul(jm, g))
    return max(abs(m[i][j] - jm[i][j]) for i in range(n + 1) for j in range(n + 1))


def is_isometry(g: Matrix, tol: float = EPS) -> bool:
    if any(len(row) != len(g) for row in g):
        return False
    return isometry_defect(g) <= tol


def apply(g: Matrix, p: Point, tol: float = EPS, check: bool = True) -> Point:
    """Image of a point under the isometry ``g``."""
    if len(g) != p.n + 1:
        raise DimensionError("isometry and point dimensions differ")
    if check and not is_isometry(g, max(tol, 1e-9)):
        raise GeometryError("matrix does not preserve the Hermitian form")
    return project(matvec(g, standard_lift(p)), tol)
