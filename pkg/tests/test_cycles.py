import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_cycle, random_sphere
from liecycles import (
    R,
    W,
    ImproperW,
    Plane,
    Point,
    Sphere,
    chart_coords,
    decode,
    encode,
    invert_across,
    inversion_mirror,
    is_proper,
    lie_product,
    pair_invariant,
    projectively_equal,
    reorient,
)
from liecycles.errors import InvalidInput, InvalidMirror, NotOnQuadric, OutsideChart
from liecycles.oracle import angle_oracle, tangent_length_oracle


def test_encode_examples():
    assert np.array_equal(encode(Sphere([0, 0, 0], 1)), [0.5, 0, 0, 0, 1, 1])
    assert np.array_equal(encode(Point([1, 0])), [-0.5, 1, 0, 1, 0])
    assert np.array_equal(encode(Plane([0, 1], 1)), [1, 0, -1, 0, -1])
    assert np.array_equal(encode(ImproperW(2)), W(2))
    assert encode(Sphere([1, 2], 3, -1))[-1] == -3


def test_invalid_cycles():
    with pytest.raises(InvalidInput):
        Sphere([0, 0], -1)
    with pytest.raises(InvalidInput):
        Plane([0, 2], 1)


def test_decode_examples():
    s = decode(np.array([0.5, 0, 0, 0, 1, 1]))
    assert isinstance(s, Sphere) and s.radius == 1 and s.orientation == 1
    p = decode(np.array([1.0, 0, -1, 0, -1]))
    assert isinstance(p, Plane) and np.allclose(p.unit_normal, [0, 1]) and np.allclose(p.foot, [0, 1])
    assert decode(W(3)) == ImproperW(3)
    with pytest.raises(NotOnQuadric):
        decode(R(3))


def test_decode_is_scale_invariant():
    x = encode(Sphere([1, -2], 0.5, -1))
    for k in (3.0, -0.25):
        d = decode(k * x)
        assert np.allclose(d.center, [1, -2]) and d.signed_radius == pytest.approx(-0.5)


@settings(max_examples=100)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 5))
def test_round_trip(seed, n):
    rng = np.random.default_rng(seed)
    c = random_cycle(rng, n)
    x = encode(c)
    assert abs(lie_product(x, x)) <= 1e-12 * (x @ x)
    d = decode(x)
    assert type(d) is type(c)
    assert projectively_equal(encode(d), x)


def test_chart_coords_examples():
    x = encode(Sphere([0, 0, 0], 1))
    assert np.array_equal(chart_coords(x, W(3)), x)
    assert np.allclose(chart_coords(x, R(3)), [-0.5, 0, 0, 0, -1, -1])
    with pytest.raises(OutsideChart):
        chart_coords(encode(Plane([0, 0, 1], 2)), W(3))


def test_reorient():
    x = np.array([0.5, 0, 0, 0, 1, 1])
    assert np.array_equal(reorient(x), [0.5, 0, 0, 0, 1, -1])
    p = encode(Point([1, 2]))
    assert projectively_equal(reorient(p), p)
    v = np.random.default_rng(0).normal(size=7)
    assert np.array_equal(reorient(reorient(v)), v)


def test_pair_invariant_examples():
    e = lambda c, r, o=1: encode(Sphere(c, r, o))  # noqa: E731
    inv = pair_invariant(e([0, 0], 1), e([1, 0], 1))
    assert inv.kind == "intersecting" and inv.angle == pytest.approx(2 * np.pi / 3, abs=1e-12)
    assert inv.r_product == pytest.approx(-0.5)

    inv = pair_invariant(e([0, 0], 1), e([0, 0], 2))
    assert inv.kind == "disjoint" and inv.cosh_boost == pytest.approx(1.25, abs=1e-12)

    inv = pair_invariant(e([0, 0], 1), e([4, 0], 1))
    assert inv.kind == "common_tangent" and inv.tangent_distance == pytest.approx(4, abs=1e-12)
    assert inv.w_product == pytest.approx(-8)

    inv = pair_invariant(e([0, 0], 1), e([2, 0], 1, -1))
    assert inv.kind == "oriented_contact"


def test_pair_invariant_points_and_planes():
    inv = pair_invariant(encode(Point([1, 0])), encode(Sphere([0, 0], 1)))
    assert inv.kind == "incident_point"
    inv = pair_invariant(encode(Point([3, 0])), encode(Sphere([0, 0], 1)))
    assert inv.r_product is None and inv.half_chord is None and inv.tangent_distance is not None
    inv = pair_invariant(encode(Plane([0, 1], 0)), encode(Plane([1, 0], 0)))
    assert inv.kind == "intersecting" and inv.angle == pytest.approx(np.pi / 2)
    assert inv.w_product is None
    with pytest.raises(InvalidInput):
        pair_invariant(W(2), encode(Point([0, 0])))


def test_half_chord():
    # concentric-free pair without a common tangent: one sphere inside the other
    inv = pair_invariant(encode(Sphere([0, 0], 3)), encode(Sphere([1, 0], 1)))
    assert inv.kind in ("disjoint", "no_common_tangent")
    assert inv.half_chord == pytest.approx(np.sqrt(4 - 1))


@settings(max_examples=100)
@given(st.integers(0, 2 ** 32 - 1))
def test_reorientation_keeps_kind(seed):
    rng = np.random.default_rng(seed)
    x, y = encode(random_sphere(rng, 3)), encode(random_sphere(rng, 3))
    assert pair_invariant(x, y).kind == pair_invariant(reorient(x), reorient(y)).kind


def test_angle_and_tangent_vs_oracle(rng):
    for _ in range(100):
        a, b = random_sphere(rng, 2), random_sphere(rng, 2)
        inv = pair_invariant(encode(a), encode(b))
        if inv.angle is not None:
            assert inv.angle == pytest.approx(angle_oracle(a, b), abs=1e-9)
        if inv.tangent_distance is not None:
            assert inv.tangent_distance == pytest.approx(tangent_length_oracle(a, b), abs=1e-9)


def test_inversion_examples():
    m = inversion_mirror([0, 0], 1)
    img = decode(invert_across(m, encode(Point([2, 0]))))
    assert isinstance(img, Point) and np.allclose(img.location, [0.5, 0])
    on = encode(Point([0.6, 0.8]))
    assert projectively_equal(invert_across(m, on), on)
    center = invert_across(m, encode(Point([0, 0])))
    assert is_proper(center) and decode(center) == ImproperW(2)


def test_inversion_matches_classical_formula(rng):
    for _ in range(500):
        c, rho = rng.normal(size=3), rng.uniform(0.2, 3)
        p = rng.normal(size=3) * 3
        img = decode(invert_across(inversion_mirror(c, rho), encode(Point(p))))
        expect = c + rho ** 2 * (p - c) / np.sum((p - c) ** 2)
        assert np.allclose(img.location, expect, atol=1e-9 * (1 + np.abs(expect).max()))


def test_invalid_mirror():
    with pytest.raises(InvalidMirror):
        invert_across(R(2), encode(Point([1, 0])))
    with pytest.raises(InvalidMirror):
        invert_across(encode(Point([1, 0])), encode(Point([2, 0])))
