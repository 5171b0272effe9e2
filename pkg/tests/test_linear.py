from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weakhom.linear import (
    ShapeError,
    SingularMap,
    Subspace,
    exact,
    fmt,
    frac,
    identity,
    image_subspace,
    invert,
    mat_equal,
    rref,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def matrices(n, m=None):
    m = n if m is None else m
    return st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n).map(exact)


def test_frac_and_fmt_roundtrip():
    assert frac("3/6") == Fraction(1, 2)
    assert fmt(Fraction(-4, 2)) == "-2"
    assert fmt(Fraction(1, 3)) == "1/3"
    with pytest.raises((ValueError, ZeroDivisionError)):
        frac("1/0")


def test_rref_drops_zero_rows():
    rows = exact([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    red, piv = rref(rows)
    assert piv == [0, 1]
    assert mat_equal(red, [[1, 0, 1], [0, 1, 1]])


def test_invert_exact():
    A = exact([[2, 1], [1, 1]])
    assert mat_equal(invert(A), [[1, -1], [-1, 2]])
    with pytest.raises(SingularMap):
        invert(exact([[1, 2], [2, 4]]))
    with pytest.raises(ShapeError):
        invert(exact([[1, 2, 3]]))


def test_subspace_coordinates_and_maps():
    V = Subspace.span(exact([[1, 1, 0], [0, 0, 1]]))
    assert V.rank == 2
    assert V.contains(exact([2, 2, 5]))
    assert not V.contains(exact([1, 0, 0]))
    assert mat_equal(V.retraction() @ V.inclusion(), identity(2))


def test_image_subspace_is_column_span():
    f = exact([[1, 0], [1, 0], [0, 0]])
    assert image_subspace(f) == Subspace.span(exact([[1, 1, 0]]))


@settings(max_examples=40, deadline=None)
@given(matrices(3))
def test_inverse_property(A):
    try:
        B = invert(A)
    except SingularMap:
        assert image_subspace(A).rank < 3
        return
    assert mat_equal(A @ B, identity(3))
    assert mat_equal(B @ A, identity(3))


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4))
def test_rref_preserves_row_space(A):
    red, piv = rref(A)
    V = Subspace.span(A)
    assert V == Subspace.span(red)
    assert all(V.contains(row) for row in A)
    # reduced: pivot columns are unit vectors
    for i, p in enumerate(piv):
        assert [red[k, p] for k in range(len(piv))] == [int(k == i) for k in range(len(piv))]


@settings(max_examples=40, deadline=None)
@given(matrices(4, 3), st.lists(small, min_size=3, max_size=3))
def test_retraction_recovers_members(A, coeffs):
    V = image_subspace(A)
    v = A @ exact(coeffs)
    c = V.coordinates(v)
    assert c is not None
    assert mat_equal(V.inclusion() @ c, v)
