"""Scene files: cycles, families and queries described in JSON."""

import json
from dataclasses import dataclass

import numpy as np

from ..cycles import Plane, Point, Sphere
from ..errors import InvalidInput, ParseError

__all__ = ["FamilySpec", "Query", "Scene", "QUERY_ARGS", "parse_scene", "load_scene"]


# argument name -> what it refers to
QUERY_ARGS = {
    "pair_invariant": {"a": "cycle", "b": "cycle"},
    "apollonius": {"cycles": "cycles"},
    "family_classify": {"family": "family"},
    "subcycle": {"family": "family"},
    "cone": {"family": "family"},
    "family_discriminant": {"family": "family", "sprime": "special"},
    "family_cycle": {"family": "family", "cycle": "cycle"},
    "two_family": {"x": "family", "y": "family"},
    "eigenanalysis": {"x": "family", "y": "family"},
    "steiner_pair": {"x": "family", "y": "family"},
    "cone_pair": {"x": "family", "y": "family"},
}


@dataclass(frozen=True)
class FamilySpec:
    spanning: tuple
    special: object


@dataclass(frozen=True)
class Query:
    kind: str
    args: dict


@dataclass(frozen=True)
class Scene:
    dimension: int
    cycles: dict
    families: dict
    queries: tuple


def _expect(cond, message, path):
    if not cond:
        raise ParseError(message, path)


def _number(v, path):
    _expect(isinstance(v, (int, float)) and not isinstance(v, bool), "expected a number", path)
    _expect(np.isfinite(v), "number must be finite", path)
    return float(v)


def _vector(v, n, path):
    _expect(isinstance(v, list) and len(v) == n, f"expected a list of {n} numbers", path)
    return np.array([_number(x, f"{path}[{i}]") for i, x in enumerate(v)])


def _object(v, path):
    _expect(isinstance(v, dict), "expected an object", path)
    return v


def _only_keys(obj, allowed, path):
    extra = sorted(set(obj) - set(allowed))
    _expect(not extra, f"unexpected key {extra[0]!r}" if extra else "", path)


def _parse_cycle(desc, n, path):
    desc = _object(desc, path)
    _expect(len(desc) == 1, "a cycle has exactly one of sphere, point or plane", path)
    (tag, body), = desc.items()
    sub = f"{path}.{tag}"
    body = _object(body, sub)
    try:
        if tag == "sphere":
            _only_keys(body, {"center", "radius", "orientation"}, sub)
            _expect("center" in body and "radius" in body, "sphere needs center and radius", sub)
            center = _vector(body["center"], n, f"{sub}.center")
            radius = _number(body["radius"], f"{sub}.radius")
            _expect(radius > 0, "radius must be positive", f"{sub}.radius")
            orient = body.get("orientation", 1)
            _expect(orient in (1, -1) and not isinstance(orient, bool),
                    "orientation must be 1 or -1", f"{sub}.orientation")
            return Sphere(center, radius, int(orient))
        if tag == "point":
            _only_keys(body, {"location"}, sub)
            _expect("location" in body, "point needs a location", sub)
            return Point(_vector(body["location"], n, f"{sub}.location"))
        if tag == "plane":
            _only_keys(body, {"normal", "through"}, sub)
            _expect("normal" in body and "through" in body, "plane needs normal and through", sub)
            nrm = _vector(body["normal"], n, f"{sub}.normal")
            _expect(np.linalg.norm(nrm) > 0, "normal must be nonzero", f"{sub}.normal")
            return Plane.through(nrm, _vector(body["through"], n, f"{sub}.through"))
    except InvalidInput as exc:
        raise ParseError(str(exc), sub) from exc
    raise ParseError(f"unknown cycle type {tag!r}", path)


def _parse_special(v, path):
    if isinstance(v, str):
        _expect(v in ("R", "W"), "special must be \"R\", \"W\" or {\"torus\": rho}", path)
        return v
    if isinstance(v, dict):
        _expect(set(v) == {"torus"}, "special must be \"R\", \"W\" or {\"torus\": rho}", path)
        return {"torus": _number(v["torus"], f"{path}.torus")}
    raise ParseError("special must be \"R\", \"W\" or {\"torus\": rho}", path)


def _ref(v, table, what, path):
    _expect(isinstance(v, str), f"expected a {what} id", path)
    _expect(v in table, f"unknown {what} id {v!r}", path)
    return v


def _parse_query(q, idx, cycles, families):
    path = f"$.queries[{idx}]"
    q = _object(q, path)
    _only_keys(q, {"kind", "args"}, path)
    kind = q.get("kind")
    _expect(isinstance(kind, str), "query needs a string kind", f"{path}.kind")
    _expect(kind in QUERY_ARGS, f"unknown query kind {kind!r}", f"{path}.kind")
    args = _object(q.get("args", {}), f"{path}.args")
    wanted = QUERY_ARGS[kind]
    _only_keys(args, wanted, f"{path}.args")
    out = {}
    for name, what in wanted.items():
        sub = f"{path}.args.{name}"
        _expect(name in args, f"missing argument {name!r}", f"{path}.args")
        v = args[name]
        if what == "cycle":
            out[name] = _ref(v, cycles, "cycle", sub)
        elif what == "family":
            out[name] = _ref(v, families, "family", sub)
        elif what == "cycles":
            _expect(isinstance(v, list), "expected a list of cycle ids", sub)
            out[name] = tuple(_ref(x, cycles, "cycle", f"{sub}[{i}]") for i, x in enumerate(v))
        else:
            out[name] = _parse_special(v, sub)
    return Query(kind, out)


def _pairs_no_dupes(pairs):
    seen = set()
    for key, _ in pairs:
        if key in seen:
            raise ParseError(f"duplicate id {key!r}")
        seen.add(key)
    return dict(pairs)


def parse_scene(text):
    """Parse and validate a scene given as JSON text."""
    try:
        raw = json.loads(text, object_pairs_hook=_pairs_no_dupes)
    except ParseError:
        raise
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON ({exc.msg} at line {exc.lineno})") from exc
    raw = _object(raw, "$")
    _only_keys(raw, {"dimension", "cycles", "families", "queries"}, "$")

    n = raw.get("dimension")
    _expect(isinstance(n, int) and not isinstance(n, bool) and n >= 1,
            "dimension must be an integer >= 1", "$.dimension")

    cycles = {}
    for cid, desc in _object(raw.get("cycles", {}), "$.cycles").items():
        cycles[cid] = _parse_cycle(desc, n, f"$.cycles.{cid}")

    families = {}
    for fid, desc in _object(raw.get("families", {}), "$.families").items():
        path = f"$.families.{fid}"
        _expect(fid not in cycles, f"duplicate id {fid!r}", path)
        desc = _object(desc, path)
        _only_keys(desc, {"spanning", "special"}, path)
        span = desc.get("spanning")
        _expect(isinstance(span, list) and len(span) >= 1, "spanning must be a nonempty list",
                f"{path}.spanning")
        ids = tuple(_ref(x, cycles, "cycle", f"{path}.spanning[{i}]") for i, x in enumerate(span))
        _expect("special" in desc, "family needs a special cycle", path)
        families[fid] = FamilySpec(ids, _parse_special(desc["special"], f"{path}.special"))

    queries = raw.get("queries", [])
    _expect(isinstance(queries, list), "queries must be a list", "$.queries")
    qs = tuple(_parse_query(q, i, cycles, families) for i, q in enumerate(queries))
    return Scene(n, cycles, families, qs)


def load_scene(path):
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())
