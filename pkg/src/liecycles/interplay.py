"""Relations between a family and a cycle, and between two families.

Discriminants used here:

    delta(x, y, s) = Delta(X, Y, S) / (Delta(X, S) * Delta(Y, S))

for a family <x, s> and a cycle y, and the same expression with a second
family's spanning list in place of Y.  Their signs decide tangency,
linkedness of subcycles and existence of tangential distance between cones.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .config import TOL
from .core import (
    _lower,
    _matrix_rank,
    as_vec,
    complement_basis,
    gram,
    is_proper,
    lie_product,
    normalized_det,
    project,
    projectively_equal,
    quadric_projection_along,
)
from .cycles import chart_coords, pair_invariant, reorient
from .errors import (
    DegenerateTriple,
    DependentSpanningSet,
    InvalidInput,
    NumericalFailure,
)
from .families import _require_hyperbolic

__all__ = [
    "triple_discriminant",
    "family_cycle_discriminant",
    "CriticalProjection",
    "critical_projection",
    "apollonius",
    "two_family_discriminant",
    "EigenAnalysis",
    "projector_eigenanalysis",
    "ExtremalPair",
    "PairReport",
    "steiner_pair_report",
    "cone_pair_report",
]


def _cols_lower(B):
    return _lower(B.T).T


def triple_discriminant(xs, ys, s):
    """Delta(X, Y, S) / (Delta(X, S) * Delta(Y, S)) for vector lists xs, ys."""
    xs = [as_vec(x) for x in xs]
    ys = [as_vec(y) for y in ys]
    s = as_vec(s)
    return gram(xs + ys + [s]).det / (gram(xs + [s]).det * gram(ys + [s]).det)


def _check_cycle(f, y):
    y = as_vec(y)
    if len(y) != f.n + 3:
        raise InvalidInput("cycle and family live in different dimensions")
    if not is_proper(y):
        raise InvalidInput("cycle must be proper")
    s = f.special
    if abs(lie_product(y, s)) <= TOL.tau_rank * np.linalg.norm(y) * np.linalg.norm(s):
        raise InvalidInput("cycle is Lie orthogonal to the special vector")
    if _matrix_rank(np.column_stack(f.basis + [y])) < f.k + 2:
        raise DegenerateTriple("cycle lies in the span of the family")
    return y


def family_cycle_discriminant(f, y):
    """delta(x, y, s); the cofamily has cycles tangent to y iff it is <= 0."""
    _require_hyperbolic(f)
    y = _check_cycle(f, y)
    return triple_discriminant(f.spanning, [y], f.special)


@dataclass(frozen=True)
class CriticalProjection:
    projection: np.ndarray
    value: float
    second: Optional[np.ndarray] = None
    second_value: Optional[float] = None


def critical_projection(f, y):
    """Critical points of h(x) = delta(x, y, s) over the family.

    The Lie projection of y is one, with h equal to the family-cycle
    discriminant.  For (S|S) < 0 the other is a cycle x0 Lie orthogonal to
    both y and s, where h = 1/(S|S).
    """
    _require_hyperbolic(f)
    y = _check_cycle(f, y)
    s = f.special
    p = project(f.basis, y)
    value = triple_discriminant([p], [y], s)

    ss = lie_product(s, s)
    if ss >= -TOL.tau_rank * float(s @ s):
        return CriticalProjection(p, value)
    B = np.column_stack(f.basis)
    rows = np.vstack([B.T @ _lower(s), B.T @ _lower(y)])
    _, _, vt = np.linalg.svd(rows)
    x0 = B @ vt[2]
    return CriticalProjection(p, value, x0, triple_discriminant([x0], [y], s))


def apollonius(cycles):
    """Oriented cycles tangent to n + 1 given oriented cycles in R^n.

    Returns 2, 1 or 0 unit-norm homogeneous vectors according to whether the
    Gram determinant of the inputs is negative, zero or positive.
    """
    xs = [as_vec(c) for c in cycles]
    n = len(xs[0]) - 3
    if len(xs) != n + 1:
        raise InvalidInput(f"need {n + 1} cycles in R^{n}, got {len(xs)}")
    for x in xs:
        if not is_proper(x):
            raise InvalidInput("Apollonius inputs must be proper cycles")
    if _matrix_rank(np.column_stack(xs)) < len(xs):
        raise DependentSpanningSet("input cycles are linearly dependent")
    d = normalized_det(xs)
    if d > TOL.tau_class:
        return []

    U = np.column_stack(complement_basis(xs))
    q = np.array([[lie_product(a, b) for b in U.T] for a in U.T])
    mu, vecs = np.linalg.eigh(q)
    if d < -TOL.tau_class and mu[0] < 0 < mu[1]:
        out = []
        for sign in (1.0, -1.0):
            coef = np.sqrt(mu[1]) * vecs[:, 0] + sign * np.sqrt(-mu[0]) * vecs[:, 1]
            z = U @ coef
            out.append(z / np.linalg.norm(z))
        return out
    z = U @ vecs[:, int(np.argmin(np.abs(mu)))]
    return [z / np.linalg.norm(z)]


def _require_pair(fx, fy):
    _require_hyperbolic(fx)
    _require_hyperbolic(fy)
    if fx.n != fy.n or not np.allclose(fx.special, fy.special, rtol=0, atol=1e-12):
        raise InvalidInput("families must share the same special vector")
    if fx.k != fy.k:
        raise InvalidInput("families must have the same number of spanning cycles")


def two_family_discriminant(fx, fy):
    _require_pair(fx, fy)
    return triple_discriminant(fx.spanning, fy.spanning, fx.special)


@dataclass(frozen=True)
class EigenAnalysis:
    """Spectrum of P<X,S> P<Y,S> with the structural pair (1, S) removed."""

    eigenvalues: tuple
    E: tuple
    F: tuple
    fixed_lines: Optional[tuple]
    degenerate_case: bool
    eigenvalues_yx: tuple = field(default=())


def _null_rows(rows, size):
    """Orthonormal basis (columns) of {a : rows @ a = 0}."""
    rows = np.atleast_2d(rows)
    _, sv, vt = np.linalg.svd(rows)
    rank = int(np.sum(sv > TOL.tau_rank * max(sv[0], 1.0))) if sv.size else 0
    return vt[rank:].T


def _real_eig(m):
    vals, vecs = np.linalg.eig(m)
    scale = max(1.0, float(np.max(np.abs(vals)))) if vals.size else 1.0
    if vals.size and np.max(np.abs(vals.imag)) > 1e-8 * scale:
        raise NumericalFailure("complex eigenvalues of the projector product",
                               residuals=vals.imag.tolist())
    order = np.argsort(-vals.real, kind="stable")
    return vals.real[order], vecs.real[:, order]


class _Side:
    """Coordinates of one family inside the product P<X,S> P<Y,S>."""

    def __init__(self, f, other):
        self.B = np.column_stack(f.basis)
        self.G = f.gram.entries
        C = self.B.T @ _cols_lower(np.column_stack(other.basis))
        # coefficient map of P_self P_other restricted to span(self)
        self.to_other = np.linalg.solve(other.gram.entries, C.T)
        self.M = np.linalg.solve(self.G, C) @ self.to_other
        self.s_row = self.B.T @ _lower(f.special)
        self.size = self.B.shape[1]

    def spectrum(self, degenerate):
        e_s = np.zeros(self.size)
        e_s[-1] = 1.0
        if not degenerate:
            N = _null_rows(self.s_row, self.size)
            vals, w = _real_eig(N.T @ self.M @ N)
            return vals, N @ w
        N = _null_rows(np.vstack([self.s_row, e_s]), self.size)
        vals, w = _real_eig(N.T @ self.M @ N)
        beta = e_s @ self.M @ N @ w
        gap = vals - 1.0
        flat = np.abs(gap) <= 1e-10
        # at a repeated eigenvalue 1 the lift only exists when the S component decouples
        if np.any(flat & (np.abs(beta) > 1e-9 * max(1.0, np.abs(self.M).max()))):
            raise NumericalFailure("eigenvalue 1 is defective beyond the structural one",
                                   residuals=vals.tolist())
        lift = np.where(flat, 0.0, beta / np.where(flat, 1.0, gap))
        return vals, N @ w + np.outer(e_s, lift)


def _unit(v):
    q = lie_product(v, v)
    return v / np.sqrt(abs(q)) if q != 0 else v


def _fixed_line(side, eig_coeffs, s):
    """Chart-normalized proper cycle on the fixed line <t, s> of a product."""
    e_s = np.zeros(side.size)
    e_s[-1] = 1.0
    rows = [side.B.T @ _lower(side.B @ a) for a in eig_coeffs.T] + [e_s]
    t = _null_rows(np.vstack(rows), side.size)
    if t.shape[1] != 1:
        raise NumericalFailure("fixed line is not unique", residuals=[t.shape[1]])
    t = t[:, 0]
    mt = side.M @ t
    fit, *_ = np.linalg.lstsq(np.column_stack([t, e_s]), mt, rcond=None)
    resid = np.linalg.norm(np.column_stack([t, e_s]) @ fit - mt)
    if resid > 1e-7 * max(np.linalg.norm(mt), 1.0):
        raise NumericalFailure("fixed line verification failed", residuals=[resid])
    T = side.B @ t
    roots = [z for z in quadric_projection_along(T, s) if not projectively_equal(z, s)]
    if not roots:
        raise NumericalFailure("fixed line does not meet the quadric away from s")
    return chart_coords(roots[0], s)


def projector_eigenanalysis(fx, fy):
    _require_pair(fx, fy)
    s = fx.special
    degenerate = abs(lie_product(s, s)) <= TOL.tau_rank * float(s @ s)
    sx, sy = _Side(fx, fy), _Side(fy, fx)
    lam, ax = sx.spectrum(degenerate)
    lam_y, ay = sy.spectrum(degenerate)

    E, F = [], []
    for i, li in enumerate(lam):
        e = _unit(sx.B @ ax[:, i])
        if abs(li) > 1e-10:
            f = sy.B @ (sx.to_other @ ax[:, i])
        else:
            j = int(np.argmin(np.abs(lam_y - li)))
            f = sy.B @ ay[:, j]
        f = _unit(f)
        if lie_product(e, f) < 0:
            f = -f
        E.append(e)
        F.append(f)

    fixed = None
    if degenerate:
        fixed = (_fixed_line(sx, ax, s), _fixed_line(sy, ay, s))
    return EigenAnalysis(tuple(float(v) for v in lam), tuple(E), tuple(F), fixed,
                         bool(degenerate), tuple(float(v) for v in lam_y))


@dataclass(frozen=True)
class ExtremalPair:
    x: np.ndarray
    y: np.ndarray
    value: float
    reoriented: tuple = ()


@dataclass(frozen=True)
class PairReport:
    discriminant: float
    classification: str
    extremal_pairs: tuple = ()
    d_min: Optional[float] = None
    vanished: tuple = ()


def _check_independent(fx, fy):
    vecs = list(fx.spanning) + list(fy.spanning) + [fx.special]
    return _matrix_rank(np.column_stack(vecs)) == len(vecs)


def steiner_pair_report(fx, fy):
    """Intersect / linked / unlinked classification of two subcycles."""
    if fx.special_kind != "R" or fy.special_kind != "R":
        raise InvalidInput("Steiner pair report needs two r-families")
    _require_pair(fx, fy)
    if not _check_independent(fx, fy):
        raise InvalidInput("pencils share a common cycle")
    delta = two_family_discriminant(fx, fy)
    if abs(delta) <= TOL.tau_class:
        return PairReport(delta, "intersect")
    if delta > 0:
        return PairReport(delta, "unlinked")

    eig = projector_eigenanalysis(fx, fy)
    r = fx.special
    pairs = []
    for e, f in zip(eig.E, eig.F):
        ex, fy_ = e - r, f - r
        inv = pair_invariant(ex, fy_)
        value = inv.angle if inv.angle is not None else inv.cosh_boost
        pairs.append(ExtremalPair(ex, fy_, float(value), (reorient(ex), reorient(fy_))))
    return PairReport(delta, "linked", tuple(pairs))


def _vanished_factors(fx, fy):
    out = []
    if not _check_independent(fx, fy):
        out.append("common_cycle")
    try:
        sx = _Side(fx, fy)
        N = _null_rows(np.vstack([sx.s_row, np.eye(sx.size)[-1]]), sx.size)
        lam, _ = _real_eig(N.T @ sx.M @ N)
        if np.any(np.abs(1.0 - lam) <= 1e-6):
            out.append("sin_alpha")
        else:
            eig = projector_eigenanalysis(fx, fy)
            t, u = eig.fixed_lines
            if abs(lie_product(t, u)) <= 1e-6 * np.linalg.norm(t) * np.linalg.norm(u):
                out.append("tangential_distance")
    except (NumericalFailure, np.linalg.LinAlgError):
        pass
    return tuple(out)


def cone_pair_report(fx, fy):
    """Existence and value of the minimal tangential distance of two cones."""
    if fx.special_kind != "W" or fy.special_kind != "W":
        raise InvalidInput("cone pair report needs two w-families")
    _require_pair(fx, fy)
    delta = two_family_discriminant(fx, fy)
    if abs(delta) <= TOL.tau_class:
        return PairReport(delta, "shared-structure", vanished=_vanished_factors(fx, fy))
    if delta > 0:
        return PairReport(delta, "no_distance")
    eig = projector_eigenanalysis(fx, fy)
    t, u = eig.fixed_lines
    tu = lie_product(t, u)
    d = float(np.sqrt(max(-2.0 * tu, 0.0)))
    return PairReport(delta, "distance_exists", (ExtremalPair(t, u, d),), d_min=d)
