"""Evaluate scene queries and serialize the results."""

import json
import math

import numpy as np

from ..core import gram, lie_product
from ..cycles import Plane, Point, Sphere, decode, encode, pair_invariant
from ..errors import LieGeometryError, NumericalFailure
from ..families import (
    cone_geometry,
    make_family,
    s_discriminant,
    special_vector,
    subcycle_geometry,
)
from ..interplay import (
    apollonius,
    cone_pair_report,
    critical_projection,
    family_cycle_discriminant,
    projector_eigenanalysis,
    steiner_pair_report,
    two_family_discriminant,
)

__all__ = ["SCHEMA_VERSION", "run_queries", "dumps_report", "geometry_json"]

SCHEMA_VERSION = "1"


def _num(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _vec(v):
    return [_num(x) for x in np.asarray(v, dtype=float)]


def geometry_json(c):
    if isinstance(c, Sphere):
        return {"type": "sphere", "center": _vec(c.center), "radius": _num(c.radius),
                "orientation": c.orientation}
    if isinstance(c, Point):
        return {"type": "point", "location": _vec(c.location)}
    if isinstance(c, Plane):
        return {"type": "plane", "normal": _vec(c.unit_normal), "support": _num(c.support)}
    return {"type": "improper_w"}


def _cycle_json(z):
    out = {"lie": _vec(z)}
    try:
        out["geometry"] = geometry_json(decode(z))
    except LieGeometryError:
        out["geometry"] = None
    return out


class _Context:
    def __init__(self, scene):
        self.scene = scene
        self.vectors = {cid: encode(c) for cid, c in scene.cycles.items()}
        self._families = {}

    def family(self, fid):
        if fid not in self._families:
            fs = self.scene.families[fid]
            self._families[fid] = make_family([self.vectors[c] for c in fs.spanning], fs.special)
        return self._families[fid]


def _q_pair_invariant(ctx, a, b):
    inv = pair_invariant(ctx.vectors[a], ctx.vectors[b])
    return {k: (_num(v) if isinstance(v, float) else v) for k, v in vars(inv).items()}


def _q_apollonius(ctx, cycles):
    xs = [ctx.vectors[c] for c in cycles]
    sols = apollonius(xs)
    out = []
    for z in sols:
        entry = _cycle_json(z)
        entry["residual"] = max(abs(lie_product(z, x)) / (np.linalg.norm(z) * np.linalg.norm(x))
                                for x in xs)
        out.append(entry)
    return {"gram_det": gram(xs).det, "count": len(out), "solutions": out}


def _family_json(f):
    return {"classification": f.classification, "normalized_det": f.delta,
            "gram_det": f.gram.det, "special_kind": f.special_kind, "k": f.k}


def _q_family_classify(ctx, family):
    return _family_json(ctx.family(family))


def _q_subcycle(ctx, family):
    g = subcycle_geometry(ctx.family(family))
    return {
        "radius": _num(g.radius),
        "center": None if g.center is None else _vec(g.center),
        "all_planes": g.all_planes,
        "discriminant": g.discriminant,
        "carrier": [geometry_json(p) for p in g.carrier],
        "min_spheres": [geometry_json(s) for s in g.min_spheres],
    }


def _q_cone(ctx, family):
    g = cone_geometry(ctx.family(family))
    return {
        "half_angle": g.half_angle,
        "discriminant": g.discriminant,
        "axis_plane": [geometry_json(p) for p in g.axis_plane],
        "apex": [geometry_json(p) for p in g.apex_set],
    }


def _q_family_discriminant(ctx, family, sprime):
    f = ctx.family(family)
    sp = special_vector(sprime, f.n)
    return {"discriminant": s_discriminant(f, sp), "sprime": _vec(sp)}


def _q_family_cycle(ctx, family, cycle):
    f = ctx.family(family)
    y = ctx.vectors[cycle]
    delta = family_cycle_discriminant(f, y)
    crit = critical_projection(f, y)
    out = {
        "discriminant": delta,
        "tangent_cycles_exist": bool(delta <= 0),
        "projection": _vec(crit.projection),
        "projection_value": crit.value,
        "residual": abs(crit.value - delta),
    }
    if crit.second is not None:
        out["second_critical"] = _vec(crit.second)
        out["second_value"] = crit.second_value
    return out


def _q_two_family(ctx, x, y):
    return {"discriminant": two_family_discriminant(ctx.family(x), ctx.family(y))}


def _q_eigenanalysis(ctx, x, y):
    fx, fy = ctx.family(x), ctx.family(y)
    ea = projector_eigenanalysis(fx, fy)
    lam = np.array(ea.eigenvalues)
    delta = two_family_discriminant(fx, fy)
    out = {
        "eigenvalues": _vec(lam),
        "eigenvalues_yx": _vec(ea.eigenvalues_yx),
        "degenerate_case": ea.degenerate_case,
        "E": [_vec(e) for e in ea.E],
        "F": [_vec(f) for f in ea.F],
        "discriminant": delta,
    }
    if ea.fixed_lines is not None:
        t, u = ea.fixed_lines
        out["fixed_lines"] = [_cycle_json(t), _cycle_json(u)]
        out["product_identity_residual"] = abs(delta - 2.0 * lie_product(t, u) * np.prod(1 - lam))
    else:
        out["product_identity_residual"] = abs(delta + np.prod(1 - lam))
    return out


def _pairs_json(pairs):
    out = []
    for p in pairs:
        entry = {"x": _cycle_json(p.x), "y": _cycle_json(p.y), "value": _num(p.value)}
        if p.reoriented:
            entry["reoriented"] = [_cycle_json(z) for z in p.reoriented]
        out.append(entry)
    return out


def _q_steiner_pair(ctx, x, y):
    rep = steiner_pair_report(ctx.family(x), ctx.family(y))
    return {"discriminant": rep.discriminant, "classification": rep.classification,
            "extremal_pairs": _pairs_json(rep.extremal_pairs)}


def _q_cone_pair(ctx, x, y):
    rep = cone_pair_report(ctx.family(x), ctx.family(y))
    return {"discriminant": rep.discriminant, "classification": rep.classification,
            "d_min": None if rep.d_min is None else _num(rep.d_min),
            "vanished": list(rep.vanished), "extremal_pairs": _pairs_json(rep.extremal_pairs)}


_HANDLERS = {
    "pair_invariant": _q_pair_invariant,
    "apollonius": _q_apollonius,
    "family_classify": _q_family_classify,
    "subcycle": _q_subcycle,
    "cone": _q_cone,
    "family_discriminant": _q_family_discriminant,
    "family_cycle": _q_family_cycle,
    "two_family": _q_two_family,
    "eigenanalysis": _q_eigenanalysis,
    "steiner_pair": _q_steiner_pair,
    "cone_pair": _q_cone_pair,
}


def _error_json(exc):
    err = {"kind": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, NumericalFailure) and exc.residuals is not None:
        err["residuals"] = [_num(r) for r in exc.residuals]
    return err


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    return obj


def run_queries(scene):
    """Evaluate every query; failures are recorded per query."""
    ctx = _Context(scene)
    results = []
    for i, q in enumerate(scene.queries):
        entry = {"query_index": i, "kind": q.kind}
        try:
            entry["data"] = _clean(_HANDLERS[q.kind](ctx, **q.args))
            entry["ok"] = True
        except (LieGeometryError, np.linalg.LinAlgError, ValueError) as exc:
            entry["ok"] = False
            entry["error"] = _error_json(exc)
        results.append(entry)
    return {"schema_version": SCHEMA_VERSION, "results": results}


def dumps_report(report):
    """Canonical JSON text: sorted keys, shortest round-trip floats."""
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"
