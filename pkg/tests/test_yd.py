import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gp2_objects
from weakhom.checks import all_pass
from weakhom.constructions import groupoid_pair, object_permutation, trivial_1d
from weakhom.linear import exact, identity
from weakhom.yd import (
    AutomorphismPair,
    YDModule,
    build_entwining,
    certify_pair,
    check_entwined_module,
    check_entwining,
    check_yd,
    check_yd_equivalent_form,
    corrupt,
    entwined_verdict,
    equivalent_form_verdict,
    flip_entwining,
    identity_pair,
    unit_object,
    yd_verdict,
)
from weakhom.constructions import NotAMorphism


def by_id(reports):
    return {r.identity_id: r for r in reports}


@pytest.fixture(scope="module")
def Ht2():
    return unit_object(groupoid_pair(2))


def test_unit_object_is_yd(Ht2):
    assert Ht2.dim == 2
    assert Ht2.component == identity_pair(Ht2.host)
    assert all_pass(check_yd(Ht2))


def test_zero_action_breaks_module_unit(Ht2):
    bad = Ht2.replace(action=exact(np.zeros_like(Ht2.action)))
    assert not by_id(check_yd(bad))["module-unit"].passed


def test_conjugated_unit_object_is_yd():
    _, _, objs = gp2_objects()
    assert all_pass(check_yd(objs["sigma H_t"]))


def test_equivalent_form_agrees(Ht2):
    assert all_pass(check_yd_equivalent_form(Ht2))
    zero = Ht2.replace(coaction=exact(np.zeros_like(Ht2.coaction)))
    assert not yd_verdict(zero) and not equivalent_form_verdict(zero)


def test_certify_pair_rejects_non_automorphisms():
    H = groupoid_pair(2)
    f = identity(4)
    f[1, 1] = 0
    with pytest.raises(NotAMorphism):
        certify_pair(H, f, identity(4))


def test_psi_values():
    H = groupoid_pair(2)
    psi = build_entwining(H, identity_pair(H)).psi
    E11, E12, E22 = 0, 1, 3
    expected = np.zeros((4, 4), dtype=int)
    expected[E12, E11] = 1
    assert (psi[E12, E22] == expected).all()
    # psi(1 (x) E_11) = E_11 (x) E_11
    one = np.einsum("a,acpq->cpq", H.unit, psi)[E11]
    expected = np.zeros((4, 4), dtype=int)
    expected[E11, E11] = 1
    assert (one == expected).all()
    K = trivial_1d()
    assert build_entwining(K, identity_pair(K)).psi.reshape(-1).tolist() == [1]


@pytest.mark.parametrize("perm", [((0, 1), (0, 1)), ((1, 0), (0, 1)), ((1, 0), (1, 0))])
def test_entwining_axioms(perm):
    H = groupoid_pair(2)
    a, b = (object_permutation(2, p) for p in perm)
    E = build_entwining(H, certify_pair(H, a, b))
    assert all_pass(check_entwining(E))


def test_flip_is_not_an_entwining():
    H = groupoid_pair(2)
    r = by_id(check_entwining(flip_entwining(H)))["entwining-multiplicative"]
    assert not r.passed and len(r.witness.index) == 3


def test_entwined_module_law(Ht2):
    reports = check_entwined_module(Ht2)
    assert all_pass(reports)
    bad = corrupt(Ht2, "action", (1, 0, 0))
    assert not entwined_verdict(bad, build_entwining(bad.host, bad.component))
    assert not yd_verdict(bad)


def corruption_sites(M):
    for which in ("action", "coaction", "mu"):
        for idx in itertools.product(*(range(s) for s in getattr(M, which).shape)):
            yield which, idx


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_random_corruptions_agree(data):
    """The three verdicts coincide on randomly corrupted unit objects."""
    n = data.draw(st.sampled_from([2, 3]))
    M = unit_object(groupoid_pair(n))
    sites = list(corruption_sites(M))
    which, idx = data.draw(st.sampled_from(sites))
    delta = data.draw(st.sampled_from([-1, 1, 2]))
    try:
        bad = corrupt(M, which, idx, delta)
    except ArithmeticError:
        return  # the twist became singular
    E = build_entwining(bad.host, bad.component)
    v = {yd_verdict(bad), equivalent_form_verdict(bad), entwined_verdict(bad, E)}
    assert len(v) == 1
