"""The engine agrees with the brute-force evaluator in ``oracle.py``.

Agreement is checked on the verdict and, for failures, on the witness tuple.
"""

import numpy as np
import pytest

from conftest import passing_fixtures
from oracle import IDENTITIES, Structure
from weakhom.checks import (
    check_antipode,
    check_hom_algebra,
    check_hom_coalgebra,
    check_weak_compat,
)
from weakhom.constructions import example_2_10, groupoid_pair


def to_oracle(H):
    S = None if H.antipode is None else H.antipode.tolist()
    return Structure(H.mul.tolist(), H.unit.tolist(), H.comul.tolist(), H.counit.tolist(),
                     H.xi.tolist(), S, H.convention)


def engine_reports(H):
    reports = check_hom_algebra(H) + check_hom_coalgebra(H) + check_weak_compat(H)
    if H.antipode is not None:
        reports += check_antipode(H)
    return {r.identity_id: r for r in reports}


def corrupted():
    """Structures on which some identities fail."""
    out = {"example-2.10[printed xi]": example_2_10(2, xi="printed")}
    G = groupoid_pair(2)
    mul = G.mul.copy()
    mul[1, 2, 0] += 1
    out["groupoid-pair-2[mul+1]"] = G.replace(mul=mul)
    comul = G.comul.copy()
    comul[3, 3, 0] += 1
    out["groupoid-pair-2[comul+1]"] = G.replace(comul=comul)
    S = G.antipode.copy()
    S[3, 1] += 1
    out["groupoid-pair-2[S+1]"] = G.replace(antipode=S)
    counit = G.counit.copy()
    counit[1] += 1
    out["groupoid-pair-2[counit+1]"] = G.replace(counit=counit)
    return out


CASES = {**passing_fixtures(), **corrupted()}


@pytest.mark.parametrize("name", sorted(CASES))
def test_engine_matches_oracle(name):
    H = CASES[name]
    ours = engine_reports(H)
    ref = to_oracle(H)
    for identity, (fn, needs_s) in IDENTITIES.items():
        if needs_s and H.antipode is None:
            continue
        expected = fn(ref)
        got = ours[identity]
        assert got.passed == (expected is None), (identity, expected, got)
        if expected is not None:
            assert tuple(got.witness.index) == tuple(expected), identity


def test_corruptions_are_detected():
    """Each corrupted structure fails at least one sampled identity."""
    for name, H in corrupted().items():
        ref = to_oracle(H)
        verdicts = [fn(ref) for fn, needs_s in IDENTITIES.values()
                    if not (needs_s and H.antipode is None)]
        assert any(v is not None for v in verdicts), name


def test_printed_xi_fails_unit_at_x8():
    ref = to_oracle(example_2_10(2, xi="printed"))
    assert IDENTITIES["unit-right"][0](ref) == (7,)
    assert IDENTITIES["unit-left"][0](ref) == (7,)
