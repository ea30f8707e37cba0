"""
Tangential distance between two cones
=====================================

For two cone pencils the discriminant decides whether every pair of members
has a common tangent.  When it does, the fixed lines of the projector
product give the pair realizing the minimal tangential distance.
"""

import numpy as np

from liecycles import Sphere, cone_pair_report, decode, make_family
from liecycles.oracle import cone_min_tangent_oracle

sx = [Sphere([0, 0, 0], 1.0), Sphere([4, 1, 0], 1.5)]
sy = [Sphere([1, 5, 2], 0.8), Sphere([3, 6, -1], 1.2)]
fx, fy = make_family(sx, "W"), make_family(sy, "W")
rep = cone_pair_report(fx, fy)
print(rep.classification, "delta", rep.discriminant)
if rep.d_min is not None:
    print("d_min", rep.d_min, "sampling oracle", cone_min_tangent_oracle(sx, sy))
    for z in rep.extremal_pairs[0].x, rep.extremal_pairs[0].y:
        print("  realized by", decode(z))

# parallel cylinders: the sine factor vanishes
cyl = make_family([Sphere([0, 0], 1), Sphere([4, 0], 1)], "W")
up = make_family([Sphere([0, 6], 1), Sphere([4, 6], 1)], "W")
rep = cone_pair_report(cyl, up)
print(rep.classification, rep.discriminant, rep.vanished)
