import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qkring.intmatrix import (determinant, identity_matrix, mat_mul,
                              smith_normal_form)


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == [1, 6]
    assert smith_normal_form(identity_matrix(4)).diagonal == [1, 1, 1, 1]
    assert smith_normal_form([[16, 0], [0, 0]]).diagonal == [16, 0]


def test_snf_verify_examples():
    for M in ([[2, 0], [0, 3]], [[12, 6, 4], [3, 9, 6], [2, 16, 14]],
              [[0, 0], [0, 0]], [[5]]):
        assert smith_normal_form(M).verify(M)


def test_snf_known_value():
    snf = smith_normal_form([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
    assert snf.diagonal == [1, 10, 30]


def test_snf_rectangular():
    M = [[2, 4, 6], [4, 8, 12]]
    snf = smith_normal_form(M)
    assert snf.verify(M)
    assert snf.diagonal == [2, 0]


def _matrices(rows, cols):
    return st.lists(
        st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows)


@settings(max_examples=40)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_snf_random(rows, cols, data):
    M = data.draw(_matrices(rows, cols))
    snf = smith_normal_form(M)
    assert snf.verify(M)


def test_determinant_examples():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant(identity_matrix(5)) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[2, 0, 0], [0, 0, 0], [0, 0, 3]]) == 0


def test_determinant_rejects_non_square():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=40)
@given(st.integers(1, 4), st.data())
def test_determinant_vs_snf(n, data):
    M = data.draw(_matrices(n, n))
    d = determinant(M)
    prod = 1
    for x in smith_normal_form(M).diagonal:
        prod *= x
    assert abs(d) == prod


@settings(max_examples=30)
@given(st.integers(1, 4), st.data())
def test_determinant_multiplicative(n, data):
    A = data.draw(_matrices(n, n))
    B = data.draw(_matrices(n, n))
    assert determinant(mat_mul(A, B)) == determinant(A) * determinant(B)
