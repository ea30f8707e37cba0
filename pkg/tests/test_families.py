import numpy as np
import pytest

from liecycles import (
    R,
    W,
    Plane,
    Point,
    Sphere,
    circle_family,
    cone_geometry,
    decode,
    encode,
    family_frame,
    lie_product,
    make_family,
    project,
    s_discriminant,
    sample_family,
    simplex_invariants,
    special_vector,
    subcycle_geometry,
)
from liecycles.errors import DependentSpanningSet, InvalidInput, NotOnQuadric
from liecycles.oracle import cayley_menger


def steiner_unit_pair():
    return make_family([Sphere([-0.5, 0, 0], 1), Sphere([0.5, 0, 0], 1)], "R")


def test_special_vectors():
    assert np.array_equal(special_vector("R", 2), R(2))
    assert np.array_equal(special_vector({"torus": 2.0}, 2), 2 * W(2) + R(2))
    with pytest.raises(InvalidInput):
        special_vector("Q", 2)


def test_classification():
    assert steiner_unit_pair().classification == "hyperbolic"
    # two disjoint coplanar circles span an elliptic Steiner pencil
    f = make_family([Sphere([0, 0], 1), Sphere([0, 0], 2)], "R")
    assert f.classification == "elliptic"
    # tangent circles: parabolic
    f = make_family([Sphere([0, 0], 1), Sphere([2, 0], 1)], "R")
    assert f.classification == "parabolic"


def test_family_errors():
    with pytest.raises(NotOnQuadric):
        make_family([R(2), encode(Sphere([0, 0], 1))], "W")
    with pytest.raises(DependentSpanningSet):
        make_family([Sphere([0, 0], 1), Sphere([0, 0], 1)], "W")


def test_steiner_frame():
    f = steiner_unit_pair()
    frame = family_frame(f, "W")
    assert frame.discriminant == pytest.approx(-4 / 3, abs=1e-12)
    assert abs(lie_product(frame.center, R(3))) < 1e-12
    for ell in frame.l_basis:
        assert abs(lie_product(ell, frame.center)) < 1e-12


def test_subcycle_geometry():
    g = subcycle_geometry(steiner_unit_pair())
    assert g.radius == pytest.approx(np.sqrt(3) / 2, abs=1e-12)
    assert np.allclose(g.center, 0, atol=1e-12)
    assert {s.orientation for s in g.min_spheres} == {1, -1}
    assert all(np.allclose(np.abs(p.unit_normal), [1, 0, 0]) and abs(p.support) < 1e-12
               for p in g.carrier)


def test_subcycle_three_spheres():
    # unit spheres of R^4 centered on a triangle: the common circle sits at
    # the circumcenter with radius sqrt(1 - circumradius^2)
    f = make_family([Sphere([-0.5, 0, 0, 0], 1), Sphere([0.5, 0, 0, 0], 1),
                     Sphere([0, 0.3, 0, 0], 1)], "R")
    y = -0.16 / 0.6
    g = subcycle_geometry(f)
    assert f.k == 3
    assert g.radius == pytest.approx(np.sqrt(1 - 0.25 - y * y), abs=1e-12)
    assert np.allclose(g.center, [0, y, 0, 0], atol=1e-12)


def test_subcycle_all_planes():
    f = make_family([Plane([1, 0, 0], 0), Plane([0, 1, 0], 0)], "R")
    assert subcycle_geometry(f).all_planes


def test_circle_family_radius():
    f = circle_family([1, 2, 3], [1, 1, 0], 0.7)
    g = subcycle_geometry(f)
    assert g.radius == pytest.approx(0.7) and np.allclose(g.center, [1, 2, 3])


def test_subcycle_needs_steiner():
    with pytest.raises(InvalidInput):
        subcycle_geometry(make_family([Sphere([0, 0], 1), Sphere([3, 0], 2)], "W"))


def test_cone_geometry():
    f = make_family([Sphere([0, 0], 1), Sphere([3, 0], 2)], "W")
    g = cone_geometry(f)
    assert g.discriminant == pytest.approx(-9 / 8, abs=1e-12)
    assert g.half_angle == pytest.approx(np.arcsin(1 / 3), abs=1e-12)
    assert len(g.apex_set) == 1 and np.allclose(g.apex_set[0].location, [-3, 0])
    assert all(np.allclose(np.abs(p.unit_normal), [1, 0]) and abs(p.foot[0] + 3) < 1e-12
               for p in g.axis_plane)


def test_cylinder_and_point_pencils():
    cyl = cone_geometry(make_family([Sphere([0, 0], 1), Sphere([4, 0], 1)], "W"))
    assert cyl.discriminant == pytest.approx(-1) and cyl.apex_set == ()
    pts = make_family([Point([0, 0]), Point([1, 0])], "W")
    g = cone_geometry(pts)
    assert g.half_angle == pytest.approx(0, abs=1e-12)


def test_s_discriminant_guards():
    f = steiner_unit_pair()
    with pytest.raises(InvalidInput):
        s_discriminant(f, "R")


def test_simplex_invariants():
    rng = np.random.default_rng(1)
    pts = rng.normal(size=(3, 3))
    radii = rng.uniform(0.2, 1, 3)
    xs = [encode(Sphere(p, r)) for p, r in zip(pts, radii)]
    vol2 = cayley_menger(pts)
    assert simplex_invariants(xs, "centers") == pytest.approx(4 * vol2, rel=1e-9)
    with pytest.raises(InvalidInput):
        simplex_invariants(xs, "bogus")


def test_polar_sine_two_spheres():
    # orthogonal unit circles through the origin: psin = sin(pi/2) = 1
    xs = [encode(Sphere([1, 0], 1)), encode(Sphere([0, 1], 1))]
    assert simplex_invariants(xs, "polar_sine") == pytest.approx(-1, abs=1e-12)


def test_samples_are_family_members(rng):
    for special in ("R", "W"):
        f = make_family([Sphere([0, 0, 0], 1), Sphere([1, 0.5, 0], 1.3)], special)
        B = np.column_stack(f.basis)
        for z in sample_family(f, 20, rng=rng):
            assert abs(lie_product(z, z)) <= 1e-9 * (z @ z)
            assert np.linalg.norm(project(f.basis, z) - z) <= 1e-9 * np.linalg.norm(z)
            decode(z)
        assert np.linalg.matrix_rank(B) == 3


def test_deterministic_sweep():
    f = make_family([Sphere([0, 0], 1), Sphere([4, 0], 1)], "W")
    a = sample_family(f, 12)
    b = sample_family(f, 12)
    assert len(a) == 12 and all(np.array_equal(x, y) for x, y in zip(a, b))
