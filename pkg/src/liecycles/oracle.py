"""Brute-force Euclidean reference computations.

Nothing here touches homogeneous coordinates: circles and spheres are
``(center, signed_radius)`` pairs (or any object with ``center`` and
``signed_radius`` attributes), and every quantity comes from distances,
the law of cosines or direct numerical search.
"""

from math import factorial

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import Ambiguous, NoCommonTangent, NoDistance, NoIntersection

__all__ = [
    "angle_oracle",
    "tangent_length_oracle",
    "sample_circle",
    "linking_number_oracle",
    "apollonius_oracle",
    "cone_min_tangent_oracle",
    "cayley_menger",
]


def _cr(c):
    if hasattr(c, "center"):
        return np.asarray(c.center, dtype=float), float(c.signed_radius)
    p, r = c
    return np.asarray(p, dtype=float), float(r)


def angle_oracle(c1, c2):
    """Intersection angle of two oriented circles or spheres.

    With positive orientation meaning inward normal, the angle is the one
    between the normals pointing into the interiors, so two identical
    circles give pi and two circles in oriented contact give pi as well.
    """
    p1, r1 = _cr(c1)
    p2, r2 = _cr(c2)
    d2 = float(np.sum((p1 - p2) ** 2))
    cos_a = (d2 - r1 * r1 - r2 * r2) / (2.0 * r1 * r2)
    if abs(cos_a) > 1.0 + 1e-12:
        raise NoIntersection("the cycles do not intersect")
    return float(np.arccos(np.clip(cos_a, -1.0, 1.0)))


def tangent_length_oracle(c1, c2):
    """Length of the common tangent segment of two oriented cycles."""
    p1, r1 = _cr(c1)
    p2, r2 = _cr(c2)
    sq = float(np.sum((p1 - p2) ** 2)) - (r1 - r2) ** 2
    if sq < 0:
        raise NoCommonTangent("no common oriented tangent")
    return float(np.sqrt(sq))


def sample_circle(center, normal, radius, count=512):
    """Closed polyline (count, 3) approximating a circle in R^3."""
    nrm = np.asarray(normal, dtype=float)
    nrm = nrm / np.linalg.norm(nrm)
    helper = np.eye(3)[int(np.argmin(np.abs(nrm)))]
    u = np.cross(nrm, helper)
    u /= np.linalg.norm(u)
    v = np.cross(nrm, u)
    th = 2.0 * np.pi * np.arange(count) / count
    return np.asarray(center, dtype=float) + radius * (np.outer(np.cos(th), u) + np.outer(np.sin(th), v))


def linking_number_oracle(a, b):
    """Gauss linking integral of two closed polylines, rounded to an integer."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    da = np.roll(a, -1, axis=0) - a
    db = np.roll(b, -1, axis=0) - b
    ma = a + 0.5 * da
    mb = b + 0.5 * db
    r = ma[:, None, :] - mb[None, :, :]
    dist = np.linalg.norm(r, axis=-1)
    if dist.min() <= 1e-6:
        raise Ambiguous("curves are too close for a reliable linking number")
    cross = np.cross(da[:, None, :], db[None, :, :])
    total = np.sum(np.einsum("ijk,ijk->ij", r, cross) / dist ** 3) / (4.0 * np.pi)
    lk = int(np.rint(total))
    if abs(total - lk) > 0.1:
        raise Ambiguous(f"linking sum {total:.4f} is not near an integer")
    return lk


def _newton(p, rho, x, iters=80):
    """Batched Newton iteration on rows x = (z1, z2, r)."""
    scale = 1.0 + np.max(np.abs(p)) + np.max(np.abs(rho))
    for _ in range(iters):
        diff = x[:, None, :2] - p
        dr = x[:, None, 2] - rho
        res = np.sum(diff ** 2, axis=-1) - dr ** 2
        jac = np.concatenate([2 * diff, -2 * dr[..., None]], axis=-1)
        ok = np.all(np.isfinite(jac), axis=(1, 2))
        ok[ok] = np.abs(np.linalg.det(jac[ok])) > 1e-300
        step = np.zeros_like(x)
        step[ok] = np.linalg.solve(jac[ok], res[ok][..., None])[..., 0]
        x = np.where(ok[:, None], x - step, np.nan)
    diff = x[:, None, :2] - p
    res = np.sum(diff ** 2, axis=-1) - (x[:, None, 2] - rho) ** 2
    size = 1.0 + np.abs(x).max(axis=1)
    good = np.all(np.isfinite(x), axis=1) & (np.max(np.abs(res), axis=1) <= 1e-9 * scale * size)
    return x[good]


def apollonius_oracle(circles):
    """Oriented circles tangent to three oriented circles, by Newton search.

    Each solution is ``(center, signed_radius)``; a signed radius of zero is
    a point through which all three circles pass.  Lines are not searched.
    Seeds sit on circles of radius 2 * (largest center distance) and at
    multiples of it, so that very large solutions are reached too.
    """
    data = [_cr(c) for c in circles]
    p = np.array([d[0] for d in data])
    rho = np.array([d[1] for d in data])
    mid = p.mean(axis=0)
    spread = max(np.max(np.linalg.norm(p[:, None] - p[None], axis=-1)), 1.0)
    th = 2.0 * np.pi * np.arange(16) / 16
    dirs = np.column_stack([np.cos(th), np.sin(th)])
    seeds = []
    for mult in (1.0, 10.0, 100.0, 1000.0):
        for sign in (1.0, -1.0):
            r0 = sign * mult * spread
            seeds.append(np.column_stack([mid + 2.0 * mult * spread * dirs, np.full(16, r0)]))
    found = _newton(p, rho, np.vstack(seeds))
    sols = []
    for x in found:
        if all(np.linalg.norm(x - s) > 1e-6 * (1 + np.linalg.norm(s)) for s in sols):
            sols.append(x)
    sols.sort(key=lambda s: tuple(s))
    return [(s[:2].copy(), float(s[2])) for s in sols]


def _golden(fun, lo, hi):
    res = minimize_scalar(fun, bracket=(lo, hi), method="golden", tol=1e-12)
    return float(res.x), float(res.fun)


def cone_min_tangent_oracle(fx, fy, span=20.0, grid=161):
    """Smallest tangent length between members of two cone families.

    A cone family is given by two spanning spheres; its members have center
    and signed radius varying affinely along the parameter.  A coarse grid
    locates the basin, nested golden-section searches refine it.
    """
    (p1, r1), (p2, r2) = (_cr(c) for c in fx)
    (q1, s1), (q2, s2) = (_cr(c) for c in fy)
    dp, dr = p2 - p1, r2 - r1
    dq, ds = q2 - q1, s2 - s1

    def sq(t, u):
        c = (p1 + t * dp) - (q1 + u * dq)
        rr = (r1 + t * dr) - (s1 + u * ds)
        return float(c @ c - rr * rr)

    ts = np.linspace(-span, span, grid)
    cg = (p1 - q1) + ts[:, None, None] * dp - ts[None, :, None] * dq
    rg = (r1 - s1) + ts[:, None] * dr - ts[None, :] * ds
    vals = np.sum(cg * cg, axis=-1) - rg * rg
    if vals.min() < 0:
        raise NoDistance("some pair of cycles has no common tangent")
    i, j = np.unravel_index(np.argmin(vals), vals.shape)
    h = ts[1] - ts[0]

    def inner(t):
        return _golden(lambda u: sq(t, u), ts[j] - h, ts[j] + h)[1]

    t_best, _ = _golden(inner, ts[i] - h, ts[i] + h)
    u_best, v_best = _golden(lambda u: sq(t_best, u), ts[j] - h, ts[j] + h)
    if v_best < -1e-12:
        raise NoDistance("some pair of cycles has no common tangent")
    return float(np.sqrt(max(v_best, 0.0)))


def cayley_menger(points):
    """Squared volume of the simplex spanned by ``points`` (k+1 points)."""
    pts = np.asarray(points, dtype=float)
    m = len(pts)
    d2 = np.sum((pts[:, None] - pts[None]) ** 2, axis=-1)
    cm = np.ones((m + 1, m + 1))
    cm[0, 0] = 0.0
    cm[1:, 1:] = d2
    k = m - 1
    return float((-1) ** (k + 1) * np.linalg.det(cm) / (2 ** k * factorial(k) ** 2))
