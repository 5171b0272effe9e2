"""
The braided crossed structure
=============================

Truncated tensor products, conjugation by automorphism pairs and the
braiding, all as exact matrices on the truncated carriers.
"""

import numpy as np

from weakhom import braided as B
from weakhom import certify_pair, groupoid_pair, object_permutation, unit_object
from weakhom.checks import failures
from weakhom.linear import fmt


def show(m):
    for row in m:
        print("  ", " ".join(f"{fmt(v):>4}" for v in row))


H = groupoid_pair(2)
Ht = unit_object(H)
sigma = object_permutation(2, (1, 0))
g = certify_pair(H, sigma, np.eye(4, dtype=int))

T = B.tensor_yd(Ht, Ht)
print("H_t (x) H_t carrier basis (rows, flat 2 x 2 coordinates):")
show(T.carrier.basis)

C = B.conjugate_module(g, Ht)
print("(sigma, id) * (sigma, id) is the unit:", B.group_mul(g, g) == B.group_unit(H))
print("conjugate lands in the unit component:", C.component == B.group_unit(H))

b = B.braiding(T, C)
print("c for (H_t (x) H_t, sigma H_t):")
show(b.c.matrix)

reports = B.braided_suite(T, C, Ht, g)
print(len(reports), "laws checked,", len(failures(reports)), "failures")
