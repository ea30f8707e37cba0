import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from generators import random_basis
from liecycles import (
    R,
    W,
    complement_basis,
    gram,
    is_proper,
    lie_product,
    project,
    project_complement,
    projectively_equal,
    quadric_projection_along,
    reflect,
    tolerances,
)
from liecycles.config import TOL
from liecycles.errors import DegenerateSubspace, InvalidInput

UNIT3 = np.array([0.5, 0, 0, 0, 1, 1])
UNIT2 = np.array([0.5, 0, 0, 1, 1])


def finite_vec(n):
    return arrays(np.float64, n + 3, elements=st.floats(-10, 10, allow_nan=False))


@pytest.mark.parametrize("x, y, expected", [(R(3), R(3), -1.0), (W(3), W(3), 0.0), (W(3), R(3), 0.0)])
def test_special_products(x, y, expected):
    assert lie_product(x, y) == expected


def test_product_formula():
    x = np.array([1.0, 2, 3, 4, 5])
    y = np.array([6.0, 7, 8, 9, 10])
    assert lie_product(x, y) == 1 * 9 + 2 * 7 + 3 * 8 + 4 * 6 - 5 * 10


def test_product_dimension_mismatch():
    with pytest.raises(InvalidInput):
        lie_product(R(2), R(3))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(finite_vec(n), finite_vec(n))))
def test_symmetry_exact(pair):
    x, y = pair
    assert lie_product(x, y) == lie_product(y, x)


def test_gram_examples():
    assert gram([R(3)]).det == -1
    g = gram([W(3), R(3)])
    assert np.array_equal(g.entries, [[0, 0], [0, -1]]) and g.det == 0 and g.rank == 1
    assert gram([UNIT3, R(3)]).det == pytest.approx(-1, abs=1e-15)


def test_gram_det_matches_lu(rng):
    from scipy.linalg import lu_factor

    for _ in range(50):
        g = gram(random_basis(rng, 3, 4))
        lu, piv = lu_factor(g.entries)
        sign = (-1) ** np.sum(piv != np.arange(len(piv)))
        det = sign * np.prod(np.diag(lu))
        assert g.det == pytest.approx(det, rel=1e-12)


def test_project_examples():
    assert np.allclose(project([R(3)], R(3)), R(3))
    assert np.allclose(project([R(3)], W(3)), 0)
    y = UNIT3 + W(3)
    r = y - project([UNIT3, R(3)], y)
    assert abs(lie_product(r, UNIT3)) < 1e-9 and abs(lie_product(r, R(3))) < 1e-9


def test_project_complement_examples(rng):
    assert np.allclose(project_complement([R(3)], W(3)), W(3))
    assert np.allclose(project_complement([R(3)], R(3)), 0)
    b = random_basis(rng, 3, 3)
    y = rng.normal(size=6)
    assert abs(lie_product(project(b, y), project_complement(b, y))) < 1e-9 * (y @ y)


def test_singular_gram_raises():
    with pytest.raises(DegenerateSubspace):
        project([W(3)], R(3))


def test_reflect_examples(rng):
    b = random_basis(rng, 2, 2)
    y = 0.3 * b[0] - 2 * b[1]
    assert np.allclose(reflect(b, y), y, atol=1e-12)
    z = complement_basis(b)[0]
    assert np.allclose(reflect(b, z), -z, atol=1e-12)


@settings(max_examples=60)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 5))
def test_projection_properties(seed, n):
    rng = np.random.default_rng(seed)
    k = 1 + rng.integers(n + 2)
    b = random_basis(rng, n, k)
    y1, y2 = rng.normal(size=n + 3), rng.normal(size=n + 3)
    scale = np.linalg.norm(y1) * np.linalg.norm(y2)
    p1, p2 = project(b, y1), project(b, y2)
    assert np.linalg.norm(project(b, p1) - p1) <= 1e-9 * np.linalg.norm(y1)
    assert abs(lie_product(y1, p2) - lie_product(p1, y2)) <= 1e-9 * scale
    l1 = reflect(b, y1)
    assert abs(lie_product(l1, reflect(b, y2)) - lie_product(y1, y2)) <= 1e-9 * scale
    assert np.linalg.norm(reflect(b, l1) - y1) <= 1e-9 * np.linalg.norm(y1)


def test_index_two(rng):
    for n in range(1, 6):
        ev = np.linalg.eigvalsh(gram(random_basis(rng, n, n + 3)).entries)
        assert np.sum(ev < 0) == 2 and np.sum(ev > 0) == n + 1


def test_complement_basis_examples():
    comp = complement_basis([W(2)])
    assert len(comp) == 4
    assert all(abs(lie_product(c, W(2))) < 1e-12 for c in comp)
    comp_r = complement_basis([R(3)])
    assert all(abs(c[-1]) < 1e-12 for c in comp_r)
    comp2 = complement_basis([UNIT2, R(2)])
    assert len(comp2) == 3
    assert np.linalg.matrix_rank(np.column_stack([UNIT2, R(2)] + comp2)) == 5


def test_complement_basis_dependent():
    with pytest.raises(DegenerateSubspace):
        complement_basis([R(2), 2 * R(2)])


def test_quadric_projection_examples():
    x = np.array([0, 2.0, 0, 0, 0])  # (X|X) = 4, (X|R) = 0
    zs = quadric_projection_along(x, R(2))
    assert len(zs) == 2
    expect = [x + 2 * R(2), x - 2 * R(2)]
    assert all(any(projectively_equal(z, e) for e in expect) for z in zs)

    zs = quadric_projection_along(UNIT3, R(3))
    assert any(np.allclose(z, UNIT3) for z in zs)

    with pytest.raises(InvalidInput):
        quadric_projection_along(3 * R(2), R(2))


def test_quadric_projection_null_direction():
    p = np.array([-0.5, 1.0, 0, 1, 0])  # point (1, 0)
    zs = quadric_projection_along(p + 0.7 * np.array([0, 0, 1.0, 0, 0]), W(2))
    assert projectively_equal(zs[-1], W(2)) and is_proper(zs[0])
    # (X|S) = 0 and (X|X) != 0: nothing informative
    assert quadric_projection_along(np.array([0, 1.0, 0, 0, 0]), W(2)) == []


@settings(max_examples=80)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 5))
def test_quadric_projection_on_line(seed, n):
    rng = np.random.default_rng(seed)
    x, s = rng.normal(size=n + 3), rng.normal(size=n + 3)
    for z in quadric_projection_along(x, s):
        assert abs(lie_product(z, z)) <= 1e-9 * (z @ z)
        assert np.linalg.matrix_rank(np.column_stack([x, s, z]), tol=1e-8 * np.linalg.norm(z)) == 2


def test_determinant_factorization(rng):
    for n in range(1, 6):
        b = random_basis(rng, n, 2)
        ys = [rng.normal(size=n + 3) for _ in range(min(n, 3))]
        lhs = gram(b + ys).det
        rhs = gram(b).det * gram([project_complement(b, y) for y in ys]).det
        assert lhs == pytest.approx(rhs, rel=1e-8)


def test_tolerance_override():
    with tolerances(tau_class=1e-4) as tol:
        assert tol.tau_class == 1e-4
    assert TOL.tau_class == 1e-8
    with pytest.raises(TypeError):
        with tolerances(tau_bogus=1):
            pass


def test_projective_equality():
    assert projectively_equal(UNIT3, -3 * UNIT3)
    assert not projectively_equal(UNIT3, R(3))
