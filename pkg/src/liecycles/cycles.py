"""Euclidean oriented cycles and their homogeneous Lie coordinates.

Orientation convention: a positively oriented sphere has inward normal.  A
plane is stored by a unit normal ``n`` and offset ``support = n.q`` for any
point q on it; the normal plays the role of the inward normal, so flipping
its sign reverses the orientation.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import TOL
from .core import R, W, as_vec, lie_product, reflect
from .errors import InvalidInput, InvalidMirror, NotOnQuadric, OutsideChart

__all__ = [
    "Sphere",
    "Point",
    "Plane",
    "ImproperW",
    "encode",
    "decode",
    "chart_coords",
    "reorient",
    "PairInvariant",
    "pair_invariant",
    "inversion_mirror",
    "invert_across",
]


def _point(p):
    return np.atleast_1d(np.asarray(p, dtype=float))


@dataclass(frozen=True)
class Sphere:
    center: np.ndarray
    radius: float
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "center", _point(self.center))
        if not self.radius > 0:
            raise InvalidInput(f"sphere radius must be positive, got {self.radius}")
        if self.orientation not in (1, -1):
            raise InvalidInput("orientation must be +1 or -1")

    @property
    def dimension(self):
        return self.center.size

    @property
    def signed_radius(self):
        return self.orientation * self.radius


@dataclass(frozen=True)
class Point:
    location: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "location", _point(self.location))

    @property
    def dimension(self):
        return self.location.size


@dataclass(frozen=True)
class Plane:
    unit_normal: np.ndarray
    support: float

    def __post_init__(self):
        object.__setattr__(self, "unit_normal", _point(self.unit_normal))
        if abs(np.linalg.norm(self.unit_normal) - 1.0) > 1e-12:
            raise InvalidInput("plane normal must have unit length")

    @classmethod
    def through(cls, normal, point):
        """Plane with (not necessarily unit) ``normal`` through ``point``."""
        nrm = _point(normal)
        nrm = nrm / np.linalg.norm(nrm)
        return cls(nrm, float(nrm @ _point(point)))

    @property
    def dimension(self):
        return self.unit_normal.size

    @property
    def foot(self):
        """The point of the plane closest to the origin."""
        return self.support * self.unit_normal


@dataclass(frozen=True)
class ImproperW:
    """The proper cycle w, which carries no geometric cycle."""

    dimension: int


def encode(c):
    if isinstance(c, Sphere):
        p = c.center
        nu = 0.5 * (c.radius ** 2 - p @ p)
        return np.concatenate([[nu], p, [1.0, c.orientation * c.radius]])
    if isinstance(c, Point):
        p = c.location
        return np.concatenate([[-0.5 * (p @ p)], p, [1.0, 0.0]])
    if isinstance(c, Plane):
        nrm = c.unit_normal
        if abs(np.linalg.norm(nrm) - 1.0) > 1e-12:
            raise InvalidInput("plane normal must have unit length")
        return np.concatenate([[c.support], -nrm, [0.0, -1.0]])
    if isinstance(c, ImproperW):
        return W(c.dimension)
    raise InvalidInput(f"cannot encode {type(c).__name__}")


def decode(x):
    x = as_vec(x)
    n = len(x) - 3
    norm = np.linalg.norm(x)
    if abs(lie_product(x, x)) > TOL.tau_proper * norm * norm:
        raise NotOnQuadric("vector is not on the Lie quadric")
    tol = TOL.tau_proper * norm
    no_r = abs(x[-1]) <= tol
    no_w = abs(x[-2]) <= tol
    if no_r and no_w:
        return ImproperW(n)
    if no_r:
        return Point(x[1:-2] / x[-2])
    if no_w:
        nrm = x[1:-2] / x[-1]
        scale = np.linalg.norm(nrm)
        return Plane(nrm / scale, float(-x[0] / x[-1] / scale))
    y = x / x[-2]
    return Sphere(y[1:-2], abs(y[-1]), 1 if y[-1] > 0 else -1)


def chart_coords(x, s):
    """Representative of x normalized so that (X|S) = 1."""
    x = as_vec(x)
    s = as_vec(s)
    xs = lie_product(x, s)
    if abs(xs) <= TOL.tau_rank * np.linalg.norm(x) * np.linalg.norm(s):
        raise OutsideChart("cycle lies in the orthogonal complement of the chart vector")
    return x / xs


def reorient(x):
    y = np.array(as_vec(x), copy=True)
    y[-1] = -y[-1]
    return y


@dataclass(frozen=True)
class PairInvariant:
    """Geometric readout of the Lie product of two proper cycles.

    ``kind`` is the headline relation.  Every quantity whose chart is
    defined for the pair is filled in regardless of ``kind``: ``r_product``
    is the product in the r-chart (spheres and planes) and ``w_product`` the
    one in the w-chart (spheres and points).
    """

    kind: str
    product: float
    r_product: Optional[float] = None
    w_product: Optional[float] = None
    angle: Optional[float] = None
    cosh_boost: Optional[float] = None
    boost_sign: Optional[int] = None
    tangent_distance: Optional[float] = None
    half_chord: Optional[float] = None


def pair_invariant(x, y):
    x, y = as_vec(x), as_vec(y)
    cx, cy = decode(x), decode(y)
    if isinstance(cx, ImproperW) or isinstance(cy, ImproperW):
        raise InvalidInput("the improper cycle w has no geometric invariants")

    scale = np.linalg.norm(x) * np.linalg.norm(y)
    prod = lie_product(x, y)
    contact = abs(prod) <= 1e-9 * scale
    has_point = isinstance(cx, Point) or isinstance(cy, Point)

    fields_ = {}
    if not has_point:
        rx, ry = chart_coords(x, R(len(x) - 3)), chart_coords(y, R(len(y) - 3))
        t = lie_product(rx, ry)
        fields_["r_product"] = t
        if -2.0 <= t <= 0.0:
            fields_["angle"] = float(np.arccos(np.clip(-t - 1.0, -1.0, 1.0)))
        else:
            fields_["cosh_boost"] = abs(t + 1.0)
            fields_["boost_sign"] = 1 if t + 1.0 > 0 else -1
    if not (isinstance(cx, Plane) or isinstance(cy, Plane)):
        wx, wy = chart_coords(x, W(len(x) - 3)), chart_coords(y, W(len(y) - 3))
        u = lie_product(wx, wy)
        fields_["w_product"] = u
        if u <= 0.0:
            fields_["tangent_distance"] = float(np.sqrt(-2.0 * u))
        else:
            fields_["half_chord"] = float(np.sqrt(2.0 * u))

    if contact:
        kind = "incident_point" if has_point else "oriented_contact"
    elif "angle" in fields_:
        kind = "intersecting"
    elif "tangent_distance" in fields_:
        kind = "common_tangent"
    elif "cosh_boost" in fields_:
        kind = "disjoint"
    else:
        kind = "no_common_tangent"
    return PairInvariant(kind=kind, product=prod, **fields_)


def inversion_mirror(center, radius):
    """Non-proper cycle whose Lie reflection is inversion in the given sphere."""
    p = _point(center)
    return np.concatenate([[0.5 * (radius ** 2 - p @ p)], p, [1.0, 0.0]])


def invert_across(mirror, y):
    """Geometric inversion across the sphere <mirror, r> on the quadric.

    The center of inversion is sent to w (the point at infinity).
    """
    m = as_vec(mirror)
    scale = float(m @ m)
    if abs(m[-1]) > TOL.tau_rank * np.sqrt(scale):
        raise InvalidMirror("mirror must be Lie orthogonal to r")
    mm = lie_product(m, m)
    if mm <= TOL.tau_proper * scale:
        # proper mirrors or Delta(mirror, r) >= 0 carry no real inversion sphere
        raise InvalidMirror("mirror must be non-proper with (M|M) > 0")
    return reflect([m], y)
