"""Quick invariant self-tests behind ``liecycles check``."""

import numpy as np

from ..core import R, W, gram, lie_product, project, reflect
from ..cycles import Sphere, decode, encode, pair_invariant
from ..families import make_family, subcycle_geometry
from ..interplay import apollonius, family_cycle_discriminant

__all__ = ["run_checks"]


def _random_vectors(rng, n, k):
    return [rng.normal(size=n + 3) for _ in range(k)]


def _symmetry(rng):
    worst = 0.0
    for n in range(1, 6):
        for _ in range(40):
            x, y = _random_vectors(rng, n, 2)
            worst = max(worst, abs(lie_product(x, y) - lie_product(y, x)))
    return worst == 0.0, worst


def _projection(rng):
    worst = 0.0
    for n in range(1, 6):
        for _ in range(40):
            b = _random_vectors(rng, n, 2)
            y, z = _random_vectors(rng, n, 2)
            p = project(b, y)
            worst = max(worst, np.linalg.norm(project(b, p) - p) / np.linalg.norm(y),
                        abs(lie_product(reflect(b, y), reflect(b, z)) - lie_product(y, z))
                        / (np.linalg.norm(y) * np.linalg.norm(z)))
    return worst <= 1e-8, worst


def _round_trip(rng):
    worst = 0.0
    for n in range(1, 6):
        for _ in range(40):
            s = Sphere(rng.normal(size=n), rng.uniform(0.1, 3.0), int(rng.choice([-1, 1])))
            d = decode(encode(s))
            worst = max(worst, np.max(np.abs(d.center - s.center)),
                        abs(d.signed_radius - s.signed_radius))
    return worst <= 1e-9, worst


def _worked_examples(rng):
    errs = []
    a, b = encode(Sphere([0, 0], 1)), encode(Sphere([1, 0], 1))
    errs.append(abs(pair_invariant(a, b).angle - 2 * np.pi / 3))
    f = make_family([Sphere([-0.5, 0, 0], 1), Sphere([0.5, 0, 0], 1)], "R")
    errs.append(abs(subcycle_geometry(f).radius - np.sqrt(3) / 2))
    cyl = make_family([Sphere([0, 0], 1), Sphere([4, 0], 1)], "W")
    errs.append(abs(family_cycle_discriminant(cyl, encode(Sphere([2, 3], 1))) + 9))
    h = 4 / np.sqrt(3)
    tri = [encode(Sphere([h * np.cos(t), h * np.sin(t)], 1))
           for t in np.pi / 2 + 2 * np.pi * np.arange(3) / 3]
    radii = sorted(decode(z).radius for z in apollonius(tri))
    errs += [abs(radii[0] - (h - 1)), abs(radii[1] - (h + 1))]
    errs.append(abs(gram([R(2), W(2)]).det))
    worst = max(errs)
    return worst <= 1e-9, worst


CHECKS = [
    ("form symmetry", _symmetry),
    ("projection and reflection", _projection),
    ("encode/decode round trip", _round_trip),
    ("worked examples", _worked_examples),
]


def run_checks(out, seed=0):
    rng = np.random.default_rng(seed)
    ok = True
    for name, fn in CHECKS:
        passed, worst = fn(rng)
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}  (max residual {worst:.3g})", file=out)
    return ok
