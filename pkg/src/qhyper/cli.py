"""Command line front end: ``qhyper <command> [--input FILE] [--output FILE]``.

Each command reads one JSON request (or an array of requests, answered by an
array in the same order) and writes JSON.  Exit status is 0 on success, 2
for malformed input and 3 when a geometric precondition fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import congruence, invariants, metric, moduli, sampling
from .codec import (
    SchemaError,
    dec_moduli,
    dec_points,
    dumps,
    enc_moduli,
    enc_point,
    enc_quaternion,
)
from .errors import GeometryError
from .hermitian import apply, bergman_distance, standard_lift

EXIT_OK, EXIT_SCHEMA, EXIT_GEOMETRY = 0, 2, 3


def _require(req, key):
    if not isinstance(req, dict) or key not in req:
        raise SchemaError(f"request needs a {key!r} field")
    return req[key]


def _dim(req, args):
    n = req.get("n", args.n) if isinstance(req, dict) else args.n
    if n is not None and (isinstance(n, bool) or not isinstance(n, int) or n < 2):
        raise SchemaError("n must be an integer >= 2")
    return n


def cmd_invariants(req, args):
    pts = dec_points(_require(req, "points"), _dim(req, args), count=(3, 4))
    if len(pts) == 3:
        return {
            "cartan": invariants.cartan(*pts),
            "triple_product": enc_quaternion(invariants.triple_product(*pts)),
        }
    p1, p2, p3, p4 = pts
    invariants._distinct(pts, invariants.EPS)
    x1, x2, x3 = invariants.three_cross_ratios(*(standard_lift(p) for p in pts))
    triples = {"p1,p2,p3": (p1, p2, p3), "p1,p2,p4": (p1, p2, p4), "p1,p3,p4": (p1, p3, p4), "p2,p3,p4": (p2, p3, p4)}
    return {
        "cross_ratios": {
            "X(p1,p2,p3,p4)": enc_quaternion(x1),
            "X(p2,p4,p3,p1)": enc_quaternion(x2),
            "X(p1,p4,p3,p2)": enc_quaternion(x3),
        },
        "cartan": {k: invariants.cartan(*v) for k, v in triples.items()},
    }


def cmd_tau(req, args):
    pts = dec_points(_require(req, "points"), _dim(req, args), count=(4,))
    out = enc_moduli(moduli.tau(*pts))
    out["n"] = pts[0].n
    return out


def _moduli_request(req, args):
    m = dec_moduli(req.get("moduli", req) if isinstance(req, dict) else req)
    n = _dim(req, args)
    if n is None:
        raise SchemaError("the dimension n is required (--n or an 'n' field)")
    return m, n


def cmd_member(req, args):
    m, n = _moduli_request(req, args)
    tol = args.tol if args.tol is not None else moduli.D_TOL
    return {
        "member": moduli.is_in_moduli_space(m, n, tol),
        "D": moduli.d_of_g(m),
        "restrictions": moduli.satisfies_restrictions(m),
    }


def cmd_reconstruct(req, args):
    m, n = _moduli_request(req, args)
    tol = args.tol if args.tol is not None else moduli.D_TOL
    pts = moduli.reconstruct(m, n, tol)
    return {"n": n, "points": [enc_point(p) for p in pts]}


def cmd_congruent(req, args):
    n = _dim(req, args)
    p = dec_points(_require(req, "p"), n, count=(3, 4))
    q = dec_points(_require(req, "q"), n or p[0].n, count=(len(p),))
    tol = args.tol if args.tol is not None else congruence.TOL
    if len(p) == 3:
        v = congruence.triple_verdict(p, q, tol)
        return {"congruent": v.congruent, "reason": v.reason, "case": v.case}
    gram = congruence.congruent_quadruple_gram(p, q, tol)
    inv = congruence.congruent_quadruple_invariants(p, q, tol)
    return {"congruent": gram, "gram": gram, "invariants": inv}


def cmd_distance(req, args):
    if not isinstance(req, dict):
        raise SchemaError("distance expects a JSON object")
    n = _dim(req, args)
    if "points" in req:
        z, w = dec_points(req["points"], n, count=(2,))
        return {"distance": bergman_distance(z, w)}
    z = dec_points([_require(req, "point")], n)[0]
    if "geodesic" in req:
        a, b = dec_points(req["geodesic"], z.n, count=(2,))
        return {"distance": metric.distance_to_geodesic(a, b, z)}
    if "line" in req:
        a, b = dec_points(req["line"], z.n, count=(2,))
        return {"distance": metric.distance_to_qline(a, b, z)}
    raise SchemaError("distance needs 'points', or 'point' with 'geodesic' or 'line'")


def _random_item(kind, n, rng):
    if kind == "triple":
        pts = [sampling.random_point(n, rng, rng.choice(["boundary", "interior"])) for _ in range(3)]
        return {"points": [enc_point(p) for p in pts]}
    if kind == "quadruple":
        return {"points": [enc_point(sampling.random_boundary_point(n, rng)) for _ in range(4)]}
    if kind == "pair":
        pts = [sampling.random_boundary_point(n, rng) for _ in range(4)]
        g = sampling.random_isometry(n, rng)
        return {"p": [enc_point(p) for p in pts], "q": [enc_point(apply(g, p)) for p in pts]}
    if kind == "moduli":
        m = moduli.random_moduli_surface(rng) if n == 2 else moduli.random_moduli_interior(rng)
        out = enc_moduli(m)
        out["n"] = n
        return out
    raise SchemaError(f"unknown random kind {kind!r}")


def cmd_random(req, args):
    req = req if isinstance(req, dict) else {}
    kind = req.get("kind", args.kind)
    count = req.get("count", args.count)
    n = _dim(req, args) or 2
    seed = req.get("seed", args.seed)
    if not isinstance(count, int) or count < 0:
        raise SchemaError("count must be a non-negative integer")
    rng = sampling.default_rng(seed)
    return [_random_item(kind, n, rng) for _ in range(count)]


COMMANDS = {
    "invariants": cmd_invariants,
    "tau": cmd_tau,
    "member": cmd_member,
    "reconstruct": cmd_reconstruct,
    "congruent": cmd_congruent,
    "distance": cmd_distance,
    "random": cmd_random,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhyper", description="Quaternionic hyperbolic invariants, moduli and congruence.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--input", "-i", default=None, help="JSON request file, '-' for stdin (default; random reads nothing unless given)")
    ap.add_argument("--output", "-o", default="-", help="output file, '-' for stdout")
    ap.add_argument("--n", type=int, default=None, help="dimension of the hyperbolic space")
    ap.add_argument("--tol", type=float, default=None, help="comparison tolerance override")
    ap.add_argument("--seed", type=int, default=None, help="random seed (random command)")
    ap.add_argument("--kind", default="quadruple", choices=["triple", "quadruple", "pair", "moduli"], help="random corpus kind")
    ap.add_argument("--count", type=int, default=10, help="random corpus size")
    return ap


def _read(path):
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    if not text.strip():
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _run_one(fn, req, args):
    try:
        return fn(req, args), EXIT_OK
    except SchemaError as exc:
        return {"error": str(exc), "kind": "schema"}, EXIT_SCHEMA
    except (GeometryError, ZeroDivisionError) as exc:
        return {"error": str(exc), "kind": "geometry"}, EXIT_GEOMETRY


def run(argv=None) -> tuple[object, int]:
    """Parse arguments, execute and return ``(json_payload, exit_code)``."""
    args = build_parser().parse_args(argv)
    fn = COMMANDS[args.command]
    try:
        if args.input is None:
            req = None if args.command == "random" else _read("-")
        else:
            req = _read(args.input)
    except SchemaError as exc:
        return {"error": str(exc), "kind": "schema"}, EXIT_SCHEMA
    except OSError as exc:
        return {"error": str(exc), "kind": "schema"}, EXIT_SCHEMA
    if req is None and args.command != "random":
        return {"error": "empty input", "kind": "schema"}, EXIT_SCHEMA
    if isinstance(req, list) and args.command != "random":
        results = [_run_one(fn, r, args) for r in req]
        return [r for r, _ in results], max((c for _, c in results), default=EXIT_OK)
    return _run_one(fn, req, args)


def main(argv=None) -> int:
    payload, code = run(argv)
    args = build_parser().parse_args(argv)
    text = dumps(payload) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
