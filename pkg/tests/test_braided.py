import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gp2_objects
from weakhom import braided as B
from weakhom.checks import all_pass
from weakhom.constructions import groupoid_pair, object_permutation, trivial_1d
from weakhom.linear import Subspace, exact, identity, mat_equal
from weakhom.yd import certify_pair, check_yd, identity_pair, unit_object


def by_id(reports):
    return {r.identity_id: r for r in reports}


@pytest.fixture(scope="module")
def objs():
    return gp2_objects()


@pytest.fixture(scope="module")
def pool3():
    H = groupoid_pair(3)
    return B.permutation_pool(H, 3)


def test_group_examples(objs):
    H, g, _ = objs
    unit = B.group_unit(H)
    assert B.group_mul(unit, g) == g
    assert B.group_mul(g, B.group_inverse(g)) == unit
    assert B.group_mul(g, g) == unit


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_group_laws_random_triples(pool3, data):
    x, y, z = (data.draw(st.sampled_from(pool3)) for _ in range(3))
    assert B.group_mul(B.group_mul(x, y), z) == B.group_mul(x, B.group_mul(y, z))
    unit = B.group_unit(x.host)
    assert B.group_mul(B.group_inverse(x), x) == unit


def test_host_mismatch(objs):
    _, g, _ = objs
    other = identity_pair(groupoid_pair(3))
    with pytest.raises(B.HostMismatch):
        B.group_mul(g, other)


def test_tensor_of_unit_objects(objs):
    H, _, o = objs
    T = o["H_t (x) H_t"]
    # E_11 (x) E_11 and E_22 (x) E_22 in the flat 2 x 2 square
    assert T.carrier == Subspace.span(exact([[1, 0, 0, 0], [0, 0, 0, 1]]))
    assert T.component == B.group_unit(H)
    assert all_pass(check_yd(T))
    # acting by 1 is mu (x) nu on the carrier
    one = np.einsum("h,hjk->jk", H.unit, T.action)
    assert mat_equal(one.T, T.mu)


def test_associator_on_unit_objects(objs):
    _, _, o = objs
    Ht = o["H_t"]
    a = B.associator(Ht, Ht, Ht)
    assert a.src.dim == a.dst.dim == 2
    assert mat_equal(a.matrix, identity(2))
    assert B.pentagon(Ht, Ht, Ht, Ht).passed
    K = unit_object(trivial_1d())
    assert mat_equal(B.associator(K, K, K).matrix, identity(1))


def test_unit_constraints(objs):
    _, _, o = objs
    Ht = o["H_t"]
    u = B.unit_constraints(Ht)
    # l(E_11 (x) E_11) = E_11 ; carrier basis vector 0 is E_11 (x) E_11
    assert list(u.l.matrix[:, 0]) == [1, 0]
    assert all_pass(B.check_unit_constraints(Ht))
    K = unit_object(trivial_1d())
    uk = B.unit_constraints(K)
    for f in (uk.l, uk.l_inv, uk.r, uk.r_inv):
        assert mat_equal(f.matrix, identity(1))


def test_triangle(objs):
    _, _, o = objs
    for M, N in itertools.product(o.values(), repeat=2):
        assert B.triangle(M, N).passed


def test_conjugation_examples(objs):
    H, g, o = objs
    Ht = o["H_t"]
    assert B.conjugate_module(B.group_unit(H), Ht).same_structure(Ht)
    C = o["sigma H_t"]
    # E_11 acting on E_11 gives 0 after conjugation by (sigma, id)
    assert list(C.action[0, 0]) == [0, 0]
    assert all_pass(B.check_conjugation_laws(Ht, g, g, M=o["H_t (x) H_t"]))


def test_braiding_examples(objs):
    _, g, o = objs
    Ht = o["H_t"]
    b = B.braiding(Ht, Ht)
    assert mat_equal(b.c.matrix, identity(2))
    T = o["H_t (x) H_t"]
    bt = B.braiding(T, Ht)
    assert mat_equal(bt.c_inv.matrix @ bt.c.matrix, identity(bt.c.src.dim))
    K = unit_object(trivial_1d())
    assert mat_equal(B.braiding(K, K).c.matrix, identity(1))


def test_flip_coincides_with_braiding_over_pair_groupoid(objs):
    """Module twists are forced to be identities here, so c reduces to the flip."""
    _, _, o = objs
    for M, N in itertools.product(o.values(), repeat=2):
        f = B.flip_braiding(M, N)
        assert mat_equal(f.matrix, B.braiding(M, N).c.matrix)


def test_perturbed_braiding_is_caught(objs, monkeypatch):
    _, g, o = objs
    Ht, C = o["H_t"], o["sigma H_t"]
    real = B.braiding

    def perturbed(M, N, verify=True):
        b = real(M, N, verify=False)
        m = b.c.matrix.copy()
        m[0, 0] += 1
        return B.Braiding(B.Morphism(m, b.c.src, b.c.dst), b.c_inv)

    monkeypatch.setattr(B, "braiding", perturbed)
    reports = by_id(B.check_braiding_laws(Ht, C, Ht, crossing=[g]))
    for key in ("braiding-H-linear", "braiding-H-colinear", "braiding-inverse-after",
                "hexagon-left", "hexagon-right", "braiding-naturality"):
        assert not reports[key].passed, key
        assert reports[key].witness is not None


def test_braiding_laws_on_unit_triple(objs):
    _, g, o = objs
    Ht = o["H_t"]
    assert all_pass(B.check_braiding_laws(Ht, Ht, Ht, crossing=[g]))


def test_morphism_pool_members_are_yd_maps(objs):
    _, _, o = objs
    for X in o.values():
        pool = B.morphism_pool(X)
        assert len(pool) >= 3
        for f in pool:
            assert all_pass(B.check_yd_morphism(f))


def test_group_laws_on_pools():
    for n in (2, 3):
        H = groupoid_pair(n)
        assert all_pass(B.check_group_laws(B.permutation_pool(H, n)))
