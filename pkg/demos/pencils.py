"""
Steiner pencils and cone pencils
================================

A pencil spanned by two cycles and r (Steiner) shares a common subcycle;
spanned with w (cone) it shares common tangent planes.  A second special
vector turns the family into a single number with geometric meaning.
"""

import numpy as np

from liecycles import Sphere, cone_geometry, make_family, s_discriminant, sample_family, subcycle_geometry, decode

# two unit spheres of R^3 meeting in a circle
steiner = make_family([Sphere([-0.5, 0, 0], 1), Sphere([0.5, 0, 0], 1)], "R")
print(steiner.classification, "delta_W =", s_discriminant(steiner, "W"))
geo = subcycle_geometry(steiner)
print("circle radius", geo.radius, "center", geo.center)
print("carrier planes", [(p.unit_normal, p.support) for p in geo.carrier])

# no member of the pencil is smaller than the circle itself
radii = [decode(z).radius for z in sample_family(steiner, 200, rng=np.random.default_rng(0), both=True)]
print("smallest sampled sphere", min(radii))

# circles of radius 1 and 2 with centers 3 apart: a cone with vertex (-3, 0)
cone = make_family([Sphere([0, 0], 1), Sphere([3, 0], 2)], "W")
g = cone_geometry(cone)
print("delta_R =", g.discriminant)
print("half angle", g.half_angle, "arcsin(1/3) =", np.arcsin(1 / 3))
print("vertex", g.apex_set[0].location)

# equal radii give a cylinder: delta_R = -1 and no vertex
cyl = cone_geometry(make_family([Sphere([0, 0], 1), Sphere([4, 0], 1)], "W"))
print("cylinder", cyl.discriminant, cyl.apex_set)
