"""JSON encoding of quaternions, points, isometries and moduli points.

Floats are written with 17 significant digits so that a decode/encode round
trip reproduces every double exactly.
"""

from __future__ import annotations

import json
import math
from numbers import Real

from .hermitian import Matrix, Point
from .moduli import ModuliPoint
from .quaternion import Quaternion


class SchemaError(ValueError):
    """Input JSON does not have the expected shape."""


# ---------------------------------------------------------------------------
# serialization


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot encode non-finite number {x!r}")
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "inf" not in s:
        s += ".0"
    return s


def dumps(obj, indent: int | None = 2, _level: int = 0) -> str:
    """Deterministic JSON with 17-digit floats (keys keep insertion order)."""
    pad = "" if indent is None else "\n" + " " * (indent * (_level + 1))
    end = "" if indent is None else "\n" + " " * (indent * _level)
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{" + ",".join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # numeric leaves (quaternions, complex pairs) stay on one line
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v, None) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[" + ",".join(items) + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


# ---------------------------------------------------------------------------
# encoders


def enc_quaternion(q: Quaternion) -> list[float]:
    return [float(x) for x in q]


def enc_point(p: Point) -> dict:
    if p.is_infinity:
        return {"inf": True}
    return {"coords": [enc_quaternion(q) for q in p.coords]}


def enc_isometry(g: Matrix) -> list:
    return [[enc_quaternion(q) for q in row] for row in g]


def enc_complex(c: complex) -> list[float]:
    return [float(c.real), float(c.imag)]


def enc_moduli(m: ModuliPoint) -> dict:
    return {
        "c1": enc_complex(m.c1),
        "c2": enc_complex(m.c2),
        "c3": enc_complex(m.c3),
        "t": float(m.t),
        "A": float(m.A),
    }


# ---------------------------------------------------------------------------
# decoders


def _number(x, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, Real):
        raise SchemaError(f"{what}: expected a number, got {x!r}")
    return float(x)


def dec_quaternion(x) -> Quaternion:
    if not isinstance(x, list) or len(x) != 4:
        raise SchemaError(f"quaternion must be an array of 4 numbers, got {x!r}")
    return Quaternion(*(_number(v, "quaternion component") for v in x))


def dec_point(x, n: int | None = None) -> Point:
    if not isinstance(x, dict):
        raise SchemaError(f"point must be an object, got {x!r}")
    if x.get("inf") is True:
        if n is None:
            raise SchemaError("the point at infinity needs a dimension (--n or another finite point)")
        return Point.infinity(n)
    coords = x.get("coords")
    if not isinstance(coords, list) or len(coords) < 2:
        raise SchemaError("point needs 'coords' with at least 2 quaternions, or 'inf': true")
    if n is not None and len(coords) != n:
        raise SchemaError(f"point has {len(coords)} coordinates, expected n = {n}")
    return Point(len(coords), tuple(dec_quaternion(q) for q in coords))


def dec_points(xs, n: int | None = None, count: tuple[int, ...] | None = None) -> list[Point]:
    if not isinstance(xs, list):
        raise SchemaError("'points' must be an array")
    if count is not None and len(xs) not in count:
        raise SchemaError(f"expected {' or '.join(map(str, count))} points, got {len(xs)}")
    if n is None:
        finite = [x for x in xs if isinstance(x, dict) and isinstance(x.get("coords"), list)]
        if finite:
            n = len(finite[0]["coords"])
    return [dec_point(x, n) for x in xs]


def dec_complex(x, what: str) -> complex:
    if not isinstance(x, list) or len(x) != 2:
        raise SchemaError(f"{what} must be [re, im]")
    return complex(_number(x[0], what), _number(x[1], what))


def dec_moduli(x) -> ModuliPoint:
    if not isinstance(x, dict):
        raise SchemaError("moduli point must be an object")
    try:
        return ModuliPoint(
            dec_complex(x["c1"], "c1"),
            dec_complex(x["c2"], "c2"),
            dec_complex(x["c3"], "c3"),
            _number(x["t"], "t"),
            _number(x["A"], "A"),
        )
    except KeyError as exc:
        raise SchemaError(f"moduli point is missing {exc.args[0]!r}") from None


def dec_isometry(x) -> Matrix:
    if not isinstance(x, list) or not x or any(not isinstance(r, list) or len(r) != len(x) for r in x):
        raise SchemaError("isometry must be a square array of quaternions")
    return tuple(tuple(dec_quaternion(q) for q in row) for row in x)
