"""
Oriented cycles as homogeneous vectors
======================================

Spheres, points and planes become vectors of R^(n+3).  Their Lie product
reads off tangency, angles and tangential distances.
"""

import numpy as np

from liecycles import Plane, Point, Sphere, decode, encode, invert_across, inversion_mirror, pair_invariant

# a positively oriented unit circle, a point and a line in the plane
circle = encode(Sphere([0, 0], 1))
point = encode(Point([1, 0]))
line = encode(Plane.through([0, 1], [0, 1]))
print("circle", circle)
print("point ", point)
print("line  ", line)

# every proper cycle decodes back to its Euclidean description
print(decode(3.0 * circle))

# two unit circles one unit apart meet at 2*pi/3 with inward normals
inv = pair_invariant(circle, encode(Sphere([1, 0], 1)))
print(inv.kind, np.degrees(inv.angle))

# four apart they share common tangents of length 4
inv = pair_invariant(circle, encode(Sphere([4, 0], 1)))
print(inv.kind, inv.tangent_distance)

# flipping one orientation turns external tangency into oriented contact
print(pair_invariant(circle, encode(Sphere([2, 0], 1, -1))).kind)

# the line touches the circle: a point incidence and a tangency
print(pair_invariant(point, circle).kind, pair_invariant(line, circle).kind)

# inversion in the unit circle is a Lie reflection
mirror = inversion_mirror([0, 0], 1)
print(decode(invert_across(mirror, encode(Point([2, 0])))))
print(decode(invert_across(mirror, encode(Sphere([3, 0], 1)))))
