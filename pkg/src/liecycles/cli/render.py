"""SVG drawings of planar scenes."""

from xml.sax.saxutils import quoteattr

import numpy as np

from ..cycles import ImproperW, Plane, Point, Sphere, decode
from ..errors import InvalidInput, LieGeometryError, Unsupported
from ..families import sample_family
from .report import _Context

__all__ = ["render_svg", "FAMILY_SAMPLES"]

FAMILY_SAMPLES = 12
_POINT_R = 0.04


def _fmt(x):
    return f"{float(x):.6g}"


def _flip(p):
    # SVG y axis points down
    return np.array([p[0], -p[1]], dtype=float)


def _bbox_of(c):
    if isinstance(c, Sphere):
        q = _flip(c.center)
        return [q - c.radius, q + c.radius]
    if isinstance(c, Point):
        q = _flip(c.location)
        return [q, q]
    if isinstance(c, Plane):
        q = _flip(c.foot)
        return [q, q]
    return []


def _from_geometry(g):
    if g is None:
        return None
    if g["type"] == "sphere":
        return Sphere(g["center"], g["radius"], g["orientation"])
    if g["type"] == "point":
        return Point(g["location"])
    if g["type"] == "plane":
        return Plane(g["normal"], g["support"])
    return None


class _Canvas:
    def __init__(self, lo, hi):
        self.lo, self.hi = lo, hi
        self.reach = float(np.linalg.norm(hi - lo))
        self.parts = []

    def open(self, gid, cls):
        self.parts.append(f"<g id={quoteattr(gid)} class={quoteattr(cls)}>")

    def close(self):
        self.parts.append("</g>")

    def _line_ends(self, c):
        foot = _flip(c.foot)
        d = np.array([-c.unit_normal[1], -c.unit_normal[0]])
        return foot - self.reach * d, foot + self.reach * d

    def element(self, c, cls):
        if isinstance(c, Sphere):
            q = _flip(c.center)
            self.parts.append(f'<circle cx="{_fmt(q[0])}" cy="{_fmt(q[1])}" r="{_fmt(c.radius)}" '
                              f'class="{cls}"/>')
        elif isinstance(c, Point):
            q = _flip(c.location)
            self.parts.append(f'<circle cx="{_fmt(q[0])}" cy="{_fmt(q[1])}" '
                              f'r="{_fmt(_POINT_R * self.reach)}" class="{cls} point"/>')
        elif isinstance(c, Plane):
            a, b = self._line_ends(c)
            self.parts.append(f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" '
                              f'y2="{_fmt(b[1])}" class="{cls}"/>')

    def path(self, c, cls):
        if isinstance(c, Sphere) or isinstance(c, Point):
            q = _flip(c.center if isinstance(c, Sphere) else c.location)
            r = c.radius if isinstance(c, Sphere) else _POINT_R * self.reach
            d = (f"M {_fmt(q[0] - r)} {_fmt(q[1])} "
                 f"A {_fmt(r)} {_fmt(r)} 0 1 0 {_fmt(q[0] + r)} {_fmt(q[1])} "
                 f"A {_fmt(r)} {_fmt(r)} 0 1 0 {_fmt(q[0] - r)} {_fmt(q[1])} Z")
        elif isinstance(c, Plane):
            a, b = self._line_ends(c)
            d = f"M {_fmt(a[0])} {_fmt(a[1])} L {_fmt(b[0])} {_fmt(b[1])}"
        else:
            d = "M 0 0"
        self.parts.append(f'<path d="{d}" class="{cls}"/>')


_STYLE = """<style>
circle, path, line { fill: none; stroke-width: 0.5%; vector-effect: non-scaling-stroke; }
.input { stroke: #222; } .solution { stroke: #c03; } .sample { stroke: #38c; opacity: 0.6; }
.extremal { stroke: #f90; stroke-width: 2; } .point { fill: #222; }
</style>"""


def _check_report(scene, report):
    results = report.get("results")
    if not isinstance(results, list) or len(results) != len(scene.queries):
        raise InvalidInput("report does not match the scene's queries")
    for q, r in zip(scene.queries, results):
        if r.get("kind") != q.kind:
            raise InvalidInput("report does not match the scene's queries")
    return results


def render_svg(scene, report, out=None):
    """Render a 2D scene and its report; returns the SVG text."""
    if scene.dimension != 2:
        raise Unsupported("only planar (dimension 2) scenes can be rendered")
    results = _check_report(scene, report)

    drawn = []  # (group id, class, [cycles], kind)
    for cid, c in scene.cycles.items():
        drawn.append((cid, "input", [c], "element"))
    for i, (q, r) in enumerate(zip(scene.queries, results)):
        if not r.get("ok"):
            continue
        data = r["data"]
        if q.kind == "apollonius":
            sols = [_from_geometry(s["geometry"]) for s in data["solutions"]]
            drawn.append((f"q{i}-apollonius", "solution", [s for s in sols if s], "element"))
        elif q.kind in ("cone_pair", "steiner_pair") and data.get("extremal_pairs"):
            cs = []
            for p in data["extremal_pairs"]:
                cs += [_from_geometry(p["x"]["geometry"]), _from_geometry(p["y"]["geometry"])]
            drawn.append((f"q{i}-extremal", "extremal", [c for c in cs if c], "element"))

    boxes = [b for _, _, cs, _ in drawn for c in cs for b in _bbox_of(c)]
    if boxes:
        lo, hi = np.min(boxes, axis=0), np.max(boxes, axis=0)
    else:
        lo, hi = np.array([-1.0, -1.0]), np.array([1.0, 1.0])
    span = np.maximum(hi - lo, 1e-6)
    span = np.full(2, span.max())
    mid = 0.5 * (lo + hi)
    lo, hi = mid - 0.5 * span * 1.2, mid + 0.5 * span * 1.2  # 10% margin per side
    canvas = _Canvas(lo, hi)

    for gid, cls, cs, _ in drawn:
        canvas.open(gid, cls)
        for c in cs:
            canvas.element(c, cls)
        canvas.close()

    ctx = _Context(scene)
    for fid in scene.families:
        canvas.open(fid, "family")
        try:
            f = ctx.family(fid)
            samples = sample_family(f, FAMILY_SAMPLES) if f.is_hyperbolic else []
        except LieGeometryError:
            samples = []
        for z in samples[:FAMILY_SAMPLES]:
            try:
                c = decode(z)
            except LieGeometryError:
                c = ImproperW(2)
            canvas.path(c, "sample")
        canvas.close()

    w, h = hi - lo
    head = (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(lo[0])} {_fmt(lo[1])} {_fmt(w)} {_fmt(h)}" width="600" height="600">')
    text = "\n".join([head, _STYLE] + canvas.parts + ["</svg>"]) + "\n"
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
