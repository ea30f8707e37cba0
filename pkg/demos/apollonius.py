"""
Circles tangent to three circles
================================

Oriented circles tangent to three given ones form the intersection of the
Lie quadric with a projective line.  The sign of a 3x3 Gram determinant
says in advance whether there are two, one or no solutions.
"""

import numpy as np

from liecycles import Sphere, apollonius, decode, encode, lie_product, normalized_det
from liecycles.oracle import apollonius_oracle

side = 4.0
verts = [(-side / 2, 0.0), (side / 2, 0.0), (0.0, side * np.sqrt(3) / 2)]
xs = [encode(Sphere(v, 1)) for v in verts]

print("normalized Gram determinant", normalized_det(xs))
for z in apollonius(xs):
    c = decode(z)
    print(f"center {np.round(c.center, 12)}, signed radius {c.signed_radius:.12f}, "
          f"max |(Z|X_i)| {max(abs(lie_product(z, x)) for x in xs):.1e}")
print("expected radii", side / np.sqrt(3) - 1, side / np.sqrt(3) + 1)

# the Euclidean Newton solver finds the same circles
for center, radius in apollonius_oracle([(v, 1) for v in verts]):
    print("oracle", np.round(center, 12), radius)

# nested concentric circles admit no oriented tangent circle
nested = [encode(Sphere([0, 0], r)) for r in (1, 2, 3)]
print("concentric:", normalized_det(nested) > 0, apollonius(nested))
