"""
Linked and unlinked circles
===========================

Two circles of R^3 are Steiner pencils.  The sign of their two-family
discriminant separates linked from unlinked pairs, and the eigenvectors of
the product of the two Lie projectors give the extremal intersection angles.
"""

import numpy as np

from liecycles import circle_family, projector_eigenanalysis, steiner_pair_report
from liecycles.oracle import linking_number_oracle, sample_circle

a = ([0, 0, 0], [0, 0, 1], 1.0)
for center in ([1, 0, 0], [3, 0, 0], [2, 0, 0]):
    b = (center, [0, 1, 0], 1.0)
    rep = steiner_pair_report(circle_family(*a), circle_family(*b))
    try:
        lk = linking_number_oracle(sample_circle(*a), sample_circle(*b))
    except Exception as exc:
        lk = type(exc).__name__
    print(center, rep.classification, f"delta={rep.discriminant:+.4f}", "Gauss:", lk)

fx, fy = circle_family(*a), circle_family([1, 0, 0], [0, 1, 0], 1.0)
ea = projector_eigenanalysis(fx, fy)
print("eigenvalues", ea.eigenvalues, "product check", -np.prod(1 - np.array(ea.eigenvalues)))
for pair in steiner_pair_report(fx, fy).extremal_pairs:
    print("extremal angle", np.degrees(pair.value))
