"""
A family against a single cycle
===============================

The discriminant of a family and a cycle decides whether the cofamily
contains a cycle tangent to it.  For a cylinder it is minus the squared
tangential distance from the cycle to the cylinder.
"""

import numpy as np

from liecycles import Sphere, critical_projection, encode, family_cycle_discriminant, make_family
from liecycles.oracle import tangent_length_oracle

c0, c4, probe = Sphere([0, 0], 1), Sphere([4, 0], 1), Sphere([2, 3], 1)
cylinder = make_family([c0, c4], "W")
delta = family_cycle_discriminant(cylinder, encode(probe))
print("delta", delta)

# tangent lengths from the probe to the two spanning circles form a
# triangle over the base 4; its height is the distance to the cylinder
a, b = tangent_length_oracle(probe, c0), tangent_length_oracle(probe, c4)
s = (a + b + 4) / 2
height = 2 * np.sqrt(s * (s - a) * (s - b) * (s - 4)) / 4
print("triangle height squared", height ** 2)

# the Lie projection of the probe onto the family is a critical point
crit = critical_projection(cylinder, encode(probe))
print("h at the projection", crit.value)

# circles through (1, 0) and (-1, 0): tangency depends on the base points
pencil = make_family([Sphere([0, 0], 1), Sphere([0, 1], np.sqrt(2))], "R")
for center in ([3, 0], [2, 0], [0, 0.2]):
    d = family_cycle_discriminant(pencil, encode(Sphere(center, 1)))
    print(center, f"{d:+.3e}")
