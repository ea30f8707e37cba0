"""Oriented spheres, points and planes in Lie coordinates.

Cycles of R^n are carried by homogeneous vectors of R^(n+3); oriented
contact is orthogonality under an indefinite form of index 2.  Families of
cycles and their determinant-based discriminants give radii, cone angles,
tangency counts, linkedness and tangential distances.
"""

from .config import TOL, Tolerances, tolerances
from .core import (
    Gram,
    R,
    W,
    complement_basis,
    gram,
    is_proper,
    lie_product,
    normalized_det,
    project,
    project_complement,
    projectively_equal,
    quadric_projection_along,
    reflect,
)
from .cycles import (
    ImproperW,
    PairInvariant,
    Plane,
    Point,
    Sphere,
    chart_coords,
    decode,
    encode,
    invert_across,
    inversion_mirror,
    pair_invariant,
    reorient,
)
from .errors import *  # noqa: F401,F403
from .families import (
    ConeGeometry,
    Family,
    FamilyFrame,
    SubcycleGeometry,
    circle_family,
    cone_geometry,
    family_frame,
    make_family,
    s_discriminant,
    sample_family,
    simplex_invariants,
    special_vector,
    subcycle_geometry,
)
from .interplay import (
    CriticalProjection,
    EigenAnalysis,
    ExtremalPair,
    PairReport,
    apollonius,
    cone_pair_report,
    critical_projection,
    family_cycle_discriminant,
    projector_eigenanalysis,
    steiner_pair_report,
    two_family_discriminant,
)

__version__ = "0.1.0"
