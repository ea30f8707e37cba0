"""Indefinite bilinear algebra of the Lie form on R^(n+3).

A cycle in R^n is carried by a homogeneous vector ``X`` of length ``n + 3``
laid out as ``(xi0, xi1..xin, xi2, xi3)``.  Vectors are plain float numpy
arrays; two vectors describe the same cycle when one is a nonzero multiple
of the other (see :func:`projectively_equal`).

The Lie product is

    (X|Y) = xi0*eta2 + xi1.eta1 + xi2*eta0 - xi3*eta3,

a symmetric form of index 2.  Everything else in the package (charts,
families, discriminants) is expressed through it.
"""

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import DegenerateSubspace, InvalidInput

__all__ = [
    "as_vec",
    "dimension",
    "R",
    "W",
    "form_matrix",
    "lie_product",
    "projectively_equal",
    "Gram",
    "gram",
    "normalized_det",
    "is_proper",
    "project",
    "project_complement",
    "reflect",
    "complement_basis",
    "quadric_projection_along",
]


def as_vec(x):
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.size < 4:
        raise InvalidInput(f"expected a homogeneous vector of length >= 4, got shape {v.shape}")
    return v


def dimension(x):
    """Ambient Euclidean dimension n of a homogeneous vector."""
    return len(x) - 3


def R(n):
    """The non-proper special cycle r = (0, 0, ..., 0, 1)."""
    v = np.zeros(n + 3)
    v[-1] = 1.0
    return v


def W(n):
    """The proper special cycle w = (1, 0, ..., 0, 0)."""
    v = np.zeros(n + 3)
    v[0] = 1.0
    return v


def form_matrix(n):
    a = np.zeros((n + 3, n + 3))
    a[0, -2] = a[-2, 0] = 1.0
    a[1:-2, 1:-2] = np.eye(n)
    a[-1, -1] = -1.0
    return a


def lie_product(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise InvalidInput(f"dimension mismatch: {x.shape} vs {y.shape}")
    # (x0*y2 + x2*y0) and the elementwise middle sum are both order-free,
    # which keeps the product exactly symmetric
    return float((x[0] * y[-2] + x[-2] * y[0]) + np.sum(x[1:-2] * y[1:-2]) - x[-1] * y[-1])


def _lower(x):
    """A @ x, i.e. the covector of x under the Lie form."""
    out = np.array(x, dtype=float, copy=True)
    out[..., 0], out[..., -2] = x[..., -2], x[..., 0]
    out[..., -1] = -x[..., -1]
    return out


def projectively_equal(x, y, tol=1e-9):
    """True when x and y are nonzero multiples of each other."""
    x = as_vec(x)
    y = as_vec(y)
    nx, ny = np.linalg.norm(x), np.linalg.norm(y)
    if nx == 0 or ny == 0:
        return False
    u, v = x / nx, y / ny
    return min(np.linalg.norm(u - v), np.linalg.norm(u + v)) <= tol


def is_proper(x, tol=None):
    x = as_vec(x)
    tol = TOL.tau_proper if tol is None else tol
    return abs(lie_product(x, x)) <= tol * float(x @ x)


@dataclass(frozen=True)
class Gram:
    """Gram matrix of Lie products of a list of vectors."""

    entries: np.ndarray
    det: float
    rank: int
    source: tuple

    @property
    def size(self):
        return len(self.source)


def _check_list(xs):
    xs = [as_vec(x) for x in xs]
    if not xs:
        raise InvalidInput("empty vector list")
    n = len(xs[0])
    if any(len(x) != n for x in xs):
        raise InvalidInput("vectors of different dimensions")
    return xs


def _matrix_rank(m, tol=None):
    tol = TOL.tau_rank if tol is None else tol
    s = np.linalg.svd(np.atleast_2d(m), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def gram(xs):
    xs = _check_list(xs)
    k = len(xs)
    g = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            g[i, j] = g[j, i] = lie_product(xs[i], xs[j])
    return Gram(entries=g, det=float(np.linalg.det(g)), rank=_matrix_rank(g), source=tuple(xs))


def normalized_det(xs):
    """Gram determinant of the vectors scaled to unit Euclidean norm.

    The sign is that of the raw determinant; the magnitude is comparable
    against the classification threshold.
    """
    xs = _check_list(xs)
    return gram([x / np.linalg.norm(x) for x in xs]).det


def _solve_coefficients(basis, y):
    """Coefficients a with P y = sum a_i X_i."""
    basis = _check_list(basis)
    if abs(normalized_det(basis)) <= TOL.tau_rank:
        raise DegenerateSubspace("Lie form is singular on the spanned subspace")
    B = np.column_stack(basis)
    g = gram(basis).entries
    rhs = B.T @ _lower(np.asarray(y, dtype=float))
    return B, np.linalg.solve(g, rhs)


def project(basis, y):
    """Lie orthogonal projection of ``y`` onto span(basis).

    Returns a zero vector when ``y`` is Lie orthogonal to the subspace.
    """
    y = as_vec(y)
    B, a = _solve_coefficients(basis, y)
    if B.shape[0] != y.size:
        raise InvalidInput("dimension mismatch between basis and vector")
    return B @ a


def project_complement(basis, y):
    y = as_vec(y)
    return y - project(basis, y)


def reflect(basis, y):
    """Lie reflection: fixes span(basis), negates its complement."""
    y = as_vec(y)
    return y - 2.0 * project_complement(basis, y)


def complement_basis(basis):
    """Euclidean-orthonormal basis of the Lie orthogonal complement."""
    basis = _check_list(basis)
    B = np.column_stack(basis)
    if _matrix_rank(B) < len(basis):
        raise DegenerateSubspace("basis vectors are linearly dependent")
    rows = _lower(B.T)
    _, _, vt = np.linalg.svd(rows)
    return [vt[i].copy() for i in range(len(basis), B.shape[0])]


def _stable_roots(a, b, c):
    """Roots of a*l^2 + 2*b*l + c = 0 when b^2 - a*c > 0, without cancellation."""
    disc = np.sqrt(b * b - a * c)
    q = -(b + np.copysign(disc, b))
    if q == 0.0:
        return [0.0, 0.0]
    return [q / a, c / q]


def quadric_projection_along(x, s):
    """Intersections of the projective line <x, s> with the Lie quadric.

    Solves ``(X + l S | X + l S) = 0`` and returns the vectors ``X + l S``.
    With (S|S) != 0 there are two, one or no results according to the sign
    of the Gram determinant of (x, s).  With (S|S) = 0 the trivial result
    ``s`` is listed last, after the informative root; when (X|S) = 0 as well
    the result is ``[x]`` if x is already proper and empty otherwise.
    """
    x = as_vec(x)
    s = as_vec(s)
    if projectively_equal(x, s):
        raise InvalidInput("x coincides with the projection direction s")
    nx, ns = np.linalg.norm(x), np.linalg.norm(s)
    xu, su = x / nx, s / ns
    a = lie_product(su, su)
    b = lie_product(xu, su)
    c = lie_product(xu, xu)

    if abs(a) > TOL.tau_rank:
        delta = a * c - b * b
        if delta < -TOL.tau_class:
            return [(xu + lam * su) * nx for lam in _stable_roots(a, b, c)]
        if delta <= TOL.tau_class:
            return [(xu - (b / a) * su) * nx]
        return []

    if abs(b) > TOL.tau_rank:
        lam = -c / (2.0 * b)
        return [(xu + lam * su) * nx, s.copy()]
    if abs(c) <= TOL.tau_proper:
        return [x.copy()]
    return []
