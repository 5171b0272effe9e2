from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from weakhom.constructions import dualize, example_2_10, groupoid_pair, h2_remark, object_permutation, trivial_1d
from weakhom.yd import certify_pair, unit_object

LAMBDAS = (Fraction(2), Fraction(-1), Fraction(1, 3))


@lru_cache(maxsize=None)
def base_fixtures():
    out = {f"example-2.10[{lam}]": example_2_10(lam) for lam in LAMBDAS}
    out["groupoid-pair-2"] = groupoid_pair(2)
    out["groupoid-pair-3"] = groupoid_pair(3)
    out["trivial-1d"] = trivial_1d()
    out["h2-remark"] = h2_remark()
    return out


@lru_cache(maxsize=None)
def passing_fixtures():
    out = dict(base_fixtures())
    for name, H in base_fixtures().items():
        out[f"dual({name})"] = dualize(H)
    return out


def hopf_fixtures():
    return {k: H for k, H in passing_fixtures().items() if H.antipode is not None}


@lru_cache(maxsize=None)
def gp2_objects():
    """``H_t``, its conjugate by ``(sigma, id)`` and ``H_t (x) H_t`` over groupoid-pair-2."""
    from weakhom.braided import conjugate_module, tensor_yd

    H = groupoid_pair(2)
    Ht = unit_object(H)
    sigma = object_permutation(2, (1, 0))
    g = certify_pair(H, sigma, np.eye(4, dtype=int))
    return H, g, {"H_t": Ht, "sigma H_t": conjugate_module(g, Ht), "H_t (x) H_t": tensor_yd(Ht, Ht)}


@pytest.fixture
def gp2():
    return groupoid_pair(2)
