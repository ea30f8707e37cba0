"""s-families of cycles: Steiner (s = r), cone (s = w) and torus (s = rho*w + r).

A family is the intersection of the Lie quadric with the span of k proper
cycles and a special vector S.  Its S'-discriminant,

    delta_S'(x, s) = Delta(X, S, S') / Delta(X, S),

reads off the radius of a subcycle (s = r, S' = W) or the opening angle of
a cone (s = w, S' = R).
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import TOL
from .core import (
    Gram,
    R,
    W,
    _lower,
    _matrix_rank,
    as_vec,
    gram,
    is_proper,
    lie_product,
    normalized_det,
    project,
    projectively_equal,
    quadric_projection_along,
)
from .cycles import Plane, Point, Sphere, chart_coords, decode, encode
from .errors import DependentSpanningSet, InvalidInput, NotOnQuadric

__all__ = [
    "Family",
    "FamilyFrame",
    "SubcycleGeometry",
    "ConeGeometry",
    "special_vector",
    "make_family",
    "circle_family",
    "delta_sprime",
    "s_discriminant",
    "family_frame",
    "subcycle_geometry",
    "cone_geometry",
    "simplex_invariants",
    "sample_family",
]


def special_vector(which, n):
    """Canonical special vector for ``"R"``, ``"W"``, ``("torus", rho)`` or
    ``{"torus": rho}``; arrays pass through unchanged."""
    if isinstance(which, str):
        key = which.upper()
        if key == "R":
            return R(n)
        if key == "W":
            return W(n)
        raise InvalidInput(f"unknown special cycle {which!r}")
    if isinstance(which, dict) and set(which) == {"torus"}:
        which = ("torus", which["torus"])
    if isinstance(which, tuple) and len(which) == 2 and which[0] == "torus":
        return float(which[1]) * W(n) + R(n)
    v = as_vec(which)
    if len(v) != n + 3:
        raise InvalidInput("special vector has the wrong dimension")
    return v


def _special_kind(s):
    n = len(s) - 3
    if projectively_equal(s, R(n)):
        return "R"
    if projectively_equal(s, W(n)):
        return "W"
    if abs(s[0]) > 0 and np.allclose(s[1:-1], 0) and s[-1] != 0:
        return "torus"
    return "custom"


@dataclass(frozen=True)
class Family:
    spanning: tuple
    special: np.ndarray
    gram: Gram
    delta: float
    classification: str

    @property
    def n(self):
        return len(self.special) - 3

    @property
    def k(self):
        return len(self.spanning)

    @property
    def basis(self):
        return list(self.spanning) + [self.special]

    @property
    def special_kind(self):
        return _special_kind(self.special)

    @property
    def is_hyperbolic(self):
        return self.classification == "hyperbolic"


def make_family(cycles, special):
    """Build an s-family from proper cycles (Euclidean or homogeneous)."""
    vecs = []
    for c in cycles:
        v = as_vec(c) if isinstance(c, (np.ndarray, list, tuple)) else encode(c)
        if not is_proper(v):
            raise NotOnQuadric("spanning cycles of a family must be proper")
        vecs.append(v)
    if not vecs:
        raise InvalidInput("a family needs at least one spanning cycle")
    n = len(vecs[0]) - 3
    if any(len(v) != n + 3 for v in vecs):
        raise InvalidInput("spanning cycles of different dimensions")
    s = special_vector(special, n)
    basis = vecs + [s]
    if _matrix_rank(np.column_stack(basis)) < len(basis):
        raise DependentSpanningSet("spanning cycles and special vector are dependent")
    d = normalized_det(basis)
    if d < -TOL.tau_class:
        cls = "hyperbolic"
    elif d > TOL.tau_class:
        cls = "elliptic"
    else:
        cls = "parabolic"
    return Family(tuple(vecs), s, gram(basis), d, cls)


def circle_family(center, normal, radius):
    """Steiner family whose subcycle is the round circle (codimension 2)
    with given center, plane normal and radius."""
    return make_family([Plane.through(normal, center), Sphere(center, radius)], "R")


def _require_hyperbolic(f):
    if not f.is_hyperbolic:
        raise InvalidInput(f"operation needs a hyperbolic family, got {f.classification}")


def delta_sprime(xs, s, sprime):
    """Delta(X, S, S') / Delta(X, S) for arbitrary vectors."""
    xs = [as_vec(x) for x in xs]
    return gram(xs + [s, sprime]).det / gram(xs + [s]).det


def _sprime_vector(f, sprime):
    sp = special_vector(sprime, f.n)
    if abs(lie_product(sp, f.special)) > 1e-9 * np.linalg.norm(sp) * np.linalg.norm(f.special):
        raise InvalidInput("S' must be Lie orthogonal to the special vector")
    return sp


def s_discriminant(f, sprime):
    _require_hyperbolic(f)
    sp = _sprime_vector(f, sprime)
    full = f.basis + [sp]
    if _matrix_rank(np.column_stack(full)) < len(full):
        raise InvalidInput("S' lies in the span of the family")
    return gram(full).det / f.gram.det


@dataclass(frozen=True)
class FamilyFrame:
    """Projection C of S' onto the family, the dual subspace l and delta."""

    center: np.ndarray
    l_basis: tuple
    discriminant: float
    center_is_zero: bool


def _orthonormal_columns(m):
    u, sv, _ = np.linalg.svd(m, full_matrices=False)
    if sv.size == 0:
        return u[:, :0]
    rank = int(np.sum(sv > TOL.tau_rank * sv[0]))
    return u[:, :rank]


def family_frame(f, sprime):
    delta = s_discriminant(f, sprime)
    sp = _sprime_vector(f, sprime)
    B = np.column_stack(f.basis)
    c = project(f.basis, sp)
    zero = np.linalg.norm(c) <= 1e-9 * np.linalg.norm(sp)
    if zero:
        c = np.zeros_like(c)
        L = _orthonormal_columns(B)
    else:
        row = B.T @ _lower(c)
        _, _, vt = np.linalg.svd(row[None, :])
        L = _orthonormal_columns(B @ vt[1:].T)
    return FamilyFrame(c, tuple(L.T.copy()), delta, bool(zero))


def _subspace_orthogonal_to(vectors, s):
    """Orthonormal basis of span(vectors) intersected with <s>^perp."""
    M = np.column_stack(vectors)
    row = M.T @ _lower(s)
    if np.linalg.norm(row) <= TOL.tau_rank * np.linalg.norm(M):
        return list(_orthonormal_columns(M).T)
    _, _, vt = np.linalg.svd(row[None, :])
    return list(_orthonormal_columns(M @ vt[1:].T).T)


@dataclass(frozen=True)
class SubcycleGeometry:
    radius: float
    center: Optional[np.ndarray]
    carrier: tuple
    min_spheres: tuple
    all_planes: bool
    discriminant: float


def subcycle_geometry(f):
    """Euclidean data of the codimension-k sphere of a Steiner family."""
    if f.special_kind != "R":
        raise InvalidInput("subcycle geometry needs a Steiner family (special R)")
    _require_hyperbolic(f)
    frame = family_frame(f, "W")
    delta = frame.discriminant
    all_planes = abs(delta) <= TOL.tau_class or frame.center_is_zero
    r = R(f.n)

    carrier = []
    for ell in _subspace_orthogonal_to(frame.l_basis, r):
        for z in quadric_projection_along(ell, r):
            cyc = decode(z)
            if isinstance(cyc, Plane):
                carrier.append(cyc)

    if all_planes:
        return SubcycleGeometry(np.inf, None, tuple(carrier), (), True, delta)

    spheres = tuple(
        c for c in (decode(z) for z in quadric_projection_along(frame.center, r))
        if isinstance(c, Sphere)
    )
    center = np.mean([s.center for s in spheres], axis=0) if spheres else None
    radius = float(np.sqrt(-1.0 / delta)) if delta < 0 else np.nan
    return SubcycleGeometry(radius, center, tuple(carrier), spheres, False, delta)


@dataclass(frozen=True)
class ConeGeometry:
    half_angle: float
    axis_plane: tuple
    apex_set: tuple
    discriminant: float


def cone_geometry(f):
    """Opening angle, axis-orthogonal plane and apex points of a cone family."""
    if f.special_kind != "W":
        raise InvalidInput("cone geometry needs a cone family (special W)")
    _require_hyperbolic(f)
    frame = family_frame(f, "R")
    delta = frame.discriminant
    # delta_R = -1 - tan^2(half angle)
    half_angle = float(np.arctan(np.sqrt(max(-1.0 - delta, 0.0))))

    axis = ()
    if not frame.center_is_zero:
        planes = []
        for z in quadric_projection_along(frame.center, R(f.n)):
            cyc = decode(z)
            if isinstance(cyc, Plane):
                planes.append(cyc)
        axis = tuple(planes)

    w = W(f.n)
    L = np.column_stack(frame.l_basis)
    wu = w / np.linalg.norm(w)
    L = L - np.outer(wu, wu @ L)
    apex = []
    for ell in _orthonormal_columns(L).T:
        if abs(ell[-2]) <= TOL.tau_class * np.linalg.norm(ell):
            continue
        for z in quadric_projection_along(ell, w):
            cyc = decode(z)
            if isinstance(cyc, Point):
                apex.append(cyc)
                break
    return ConeGeometry(half_angle, axis, tuple(apex), delta)


_SIMPLEX_MODES = ("contact", "centers", "polar_sine")


def simplex_invariants(xs, mode):
    """Gram determinants with simplex-volume meaning.

    ``contact``: Delta(phi_W(X), W) = -((k-1)!)^2 vol(contact simplex)^2
    ``centers``: Delta(phi_W(X), R, W) = ((k-1)!)^2 vol(centers simplex)^2
    ``polar_sine``: Delta(phi_R(X), R) = -psin^2 at a common point of the spheres
    """
    if mode not in _SIMPLEX_MODES:
        raise InvalidInput(f"mode must be one of {_SIMPLEX_MODES}")
    xs = [as_vec(x) for x in xs]
    n = len(xs[0]) - 3
    if mode == "polar_sine":
        for x in xs:
            if not isinstance(decode(x), Sphere):
                raise InvalidInput("polar sine mode needs spheres")
        return gram([chart_coords(x, R(n)) for x in xs] + [R(n)]).det
    xw = [chart_coords(x, W(n)) for x in xs]
    if mode == "contact":
        return gram(xw + [W(n)]).det
    return gram(xw + [R(n), W(n)]).det


def sample_family(f, count, rng=None, both=False):
    """Proper cycles of a family.

    For k = 2 and no ``rng`` the samples follow a deterministic sweep; with
    an ``rng`` (numpy Generator) the parameters are random.  ``both`` keeps
    both quadric projections of each parameter when there are two.
    """
    s = f.special
    ss = lie_product(s, s) / float(s @ s)
    out = []
    if ss < -TOL.tau_rank:
        Q = np.column_stack(_subspace_orthogonal_to(f.basis, s))
        m = Q.shape[1]
        for i in range(count):
            if rng is None and m == 2:
                th = np.pi * i / count
                coef = np.array([np.cos(th), np.sin(th)])
            else:
                rng = rng if rng is not None else np.random.default_rng(i)
                coef = rng.normal(size=m)
            v = Q @ coef
            zs = quadric_projection_along(v, s)
            out.extend(zs if both else zs[:1])
        return out

    anchors = [chart_coords(x, s) for x in f.spanning]
    k = len(anchors)
    for i in range(count):
        if rng is None and k == 2:
            t = -1.0 + 3.0 * i / max(count - 1, 1)
            wts = np.array([1.0 - t, t])
        else:
            rng = rng if rng is not None else np.random.default_rng(i)
            wts = rng.normal(size=k)
            wts = wts / wts.sum()
        v = sum(wt * a for wt, a in zip(wts, anchors))
        zs = [z for z in quadric_projection_along(v, s) if not projectively_equal(z, s)]
        out.extend(zs[:1])
    return out

