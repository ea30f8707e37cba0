"""Random configurations shared by the test modules."""

import numpy as np

from liecycles import Plane, Point, Sphere, circle_family, make_family
from liecycles.errors import LieGeometryError


def random_sphere(rng, n, lo=0.3, hi=2.0, spread=3.0):
    return Sphere(rng.normal(size=n) * spread, rng.uniform(lo, hi), int(rng.choice([-1, 1])))


def random_point(rng, n):
    return Point(rng.normal(size=n) * 3)


def random_plane(rng, n):
    return Plane.through(rng.normal(size=n), rng.normal(size=n))


def random_cycle(rng, n):
    kind = rng.integers(3)
    return (random_sphere, random_point, random_plane)[kind](rng, n)


def random_basis(rng, n, k):
    """k random vectors of R^(n+3) with a comfortably nonsingular Gram."""
    while True:
        xs = [rng.normal(size=n + 3) for _ in range(k)]
        g = np.array([[x @ _lower(y) for y in xs] for x in xs])
        sv = np.linalg.svd(g, compute_uv=False)
        if sv[-1] > 1e-3 * sv[0]:
            return xs


def _lower(y):
    out = y.copy()
    out[0], out[-2] = y[-2], y[0]
    out[-1] = -y[-1]
    return out


def hyperbolic_cone_pair(rng, n=3, negative=True):
    """Two hyperbolic cone families (special W) with their spanning spheres."""
    from liecycles import two_family_discriminant

    while True:
        sx = [random_sphere(rng, n) for _ in range(2)]
        sy = [random_sphere(rng, n) for _ in range(2)]
        try:
            fx, fy = make_family(sx, "W"), make_family(sy, "W")
        except LieGeometryError:
            continue
        if not (fx.is_hyperbolic and fy.is_hyperbolic):
            continue
        d = two_family_discriminant(fx, fy)
        if negative is not None and (d < -1e-6) != negative:
            continue
        if abs(d) < 1e-6:
            continue
        return fx, fy, sx, sy


def random_circle(rng, spread=1.0):
    """(center, normal, radius) of a random circle in R^3."""
    return rng.normal(size=3) * spread, rng.normal(size=3), rng.uniform(0.5, 1.5)


def steiner_pair(rng, near_link=False):
    """Two circle families; ``near_link`` centers the second circle close to a
    point of the first, which makes linked pairs common."""
    while True:
        a, b = random_circle(rng), random_circle(rng, 0.8)
        if near_link:
            c, nrm, r = a
            u = np.cross(nrm, rng.normal(size=3))
            b = (c + r * u / np.linalg.norm(u) + 0.3 * rng.normal(size=3), b[1], b[2])
        try:
            return circle_family(*a), circle_family(*b), a, b
        except LieGeometryError:
            continue
