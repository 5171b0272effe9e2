"""Hypothesis properties of the checkers and constructions."""

import json

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import passing_fixtures
from weakhom import braided as B
from weakhom import io
from weakhom.bialgebra import PresentedBialgebra
from weakhom.checks import all_pass, check_hom_algebra, check_hom_coalgebra, check_weak_compat
from weakhom.constructions import dualize, groupoid_pair, xi_square_twist, xi_square_untwist
from weakhom.linear import SingularMap, exact, identity
from weakhom.yd import unit_object

small = st.fractions(min_value=-3, max_value=3, max_denominator=4)
FIXTURES = sorted(passing_fixtures())
CHECKERS = (check_hom_algebra, check_hom_coalgebra, check_weak_compat)
SETTINGS = dict(deadline=None, suppress_health_check=[HealthCheck.too_slow])


def rows(n, k):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=k, max_size=k).map(exact)


@st.composite
def random_structures(draw):
    """Arbitrary (not necessarily lawful) presentations with an invertible twist."""
    n = draw(st.integers(1, 3))
    def arr(shape):
        size = int(np.prod(shape))
        return exact(draw(st.lists(small, min_size=size, max_size=size))).reshape(shape)
    xi = arr((n, n)) + identity(n) * 7  # diagonally dominant, hence invertible
    return PresentedBialgebra(arr((n, n, n)), arr((n,)), arr((n, n, n)), arr((n,)), xi)


@settings(max_examples=25, **SETTINGS)
@given(st.sampled_from(FIXTURES), st.data())
def test_sample_vectors_agree_with_basis_sweep(name, data):
    """Identities that hold on the basis also hold on random rational vectors."""
    H = passing_fixtures()[name]
    n = H.dim
    vectors = {v: data.draw(rows(n, 2)) for v in ("a", "b", "c")}
    for check in CHECKERS:
        assert all_pass(check(H, vectors))


@settings(max_examples=40, **SETTINGS)
@given(random_structures(), st.sampled_from(CHECKERS))
def test_witness_soundness(H, check):
    """A reported witness fails when re-evaluated alone; a basis pass survives any sample."""
    for r in check(H):
        if r.passed or not r.witness.variables:
            continue
        single = {v: identity(H.dim)[[i]] for v, i in zip(r.witness.variables, r.witness.index)}
        again = {x.identity_id: x for x in check(H, single)}[r.identity_id]
        assert not again.passed
        assert list(again.witness.lhs) == list(r.witness.lhs)
        assert list(again.witness.rhs) == list(r.witness.rhs)


@settings(max_examples=25, **SETTINGS)
@given(random_structures(), st.data())
def test_basis_pass_implies_sample_pass(H, data):
    vectors = {v: data.draw(rows(H.dim, 2)) for v in ("a", "b", "c")}
    for check in CHECKERS:
        basis = {r.identity_id: r.passed for r in check(H)}
        sample = {r.identity_id: r.passed for r in check(H, vectors)}
        for key, ok in basis.items():
            if ok:
                assert sample[key], key


@settings(max_examples=25, **SETTINGS)
@given(random_structures())
def test_dual_is_an_involution(H):
    assert dualize(dualize(H)).same_as(H)


@settings(max_examples=25, **SETTINGS)
@given(random_structures())
def test_twist_untwist_inverse(H):
    assert xi_square_untwist(xi_square_twist(H)).same_as(H)


@settings(max_examples=25, **SETTINGS)
@given(random_structures())
def test_serialization_roundtrip(H):
    assert io.from_dict(json.loads(io.dumps(io.to_dict(H)))).same_as(H)


@settings(max_examples=25, **SETTINGS)
@given(st.fractions(max_denominator=10**6))
def test_rational_literal_roundtrip(x):
    from weakhom.linear import fmt
    assert io.parse_rational(fmt(x), "v") == x


_H3 = groupoid_pair(3)
_POOL3 = B.permutation_pool(_H3, 3)
_HT3 = unit_object(_H3)


@settings(max_examples=15, **SETTINGS)
@given(st.sampled_from(_POOL3), st.sampled_from(_POOL3))
def test_conjugation_is_a_group_action(g, h):
    lhs = B.conjugate_module(B.group_mul(g, h), _HT3)
    rhs = B.conjugate_module(g, B.conjugate_module(h, _HT3))
    assert lhs.same_structure(rhs)
    expected = B.group_mul(B.group_mul(g, _HT3.component), B.group_inverse(g))
    assert lhs.component == B.group_mul(B.group_mul(B.group_mul(g, h), _HT3.component),
                                        B.group_inverse(B.group_mul(g, h)))
    assert B.conjugate_module(g, _HT3).component == expected
