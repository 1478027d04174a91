import pytest
from hypothesis import given, settings, strategies as st

from chevalley import fields as F
from chevalley.errors import DimensionMismatch, NotInvertible
from chevalley.matrices import Matrix, nullspace

F7 = F.make_field("prime", 7)


def test_det_and_inverse():
    m = Matrix.from_values(F7, [[2, 1], [1, 1]])
    assert m.det() == 1
    assert (m * m.inverse()).is_identity()


def test_singular_inverse():
    with pytest.raises(NotInvertible):
        Matrix.from_values(F7, [[1, 2], [2, 4]]).inverse()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Matrix.identity(F7, 2) * Matrix.identity(F7, 3)


def test_nullspace():
    ns = nullspace(F7, [[1, 2], [2, 4]])
    assert len(ns) == 1


mats = st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=100, deadline=None)
@given(mats, mats)
def test_det_multiplicative(a, b):
    A, B = Matrix.from_values(F7, a), Matrix.from_values(F7, b)
    assert (A * B).det() == F7.mul(A.det(), B.det())


@settings(max_examples=100, deadline=None)
@given(mats)
def test_inverse_when_invertible(a):
    A = Matrix.from_values(F7, a)
    if A.det() == 0:
        with pytest.raises(NotInvertible):
            A.inverse()
    else:
        assert (A.inverse() * A).is_identity()
