import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ncpoisson.errors import DimensionMismatch, SubspaceNotContained
from ncpoisson.linalg import (Reducer, SparseMatrix, SubspaceBasis, homology_dim, inverse_matrix,
                              intersect_spans, quotient_dim, rank, rank_kernel_image, solve_in_span)


def test_identity_rank():
    r, ker, img = rank_kernel_image(SparseMatrix.from_dense([[1, 0], [0, 1]]))
    assert (r, ker.dim, img.dim) == (2, 0, 2)


def test_zero_matrix():
    r, ker, img = rank_kernel_image(SparseMatrix(3, 4))
    assert (r, ker.dim, img.dim) == (0, 4, 0)


def test_rank_one_kernel():
    m = SparseMatrix.from_dense([[1, 2], [2, 4]])
    r, ker, _ = rank_kernel_image(m)
    assert r == 1
    (v,) = ker.vectors
    # kernel is spanned by (2, -1)
    assert v[0] / v[1] == Fraction(-2)


def test_entries_out_of_range():
    with pytest.raises(DimensionMismatch):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_quotient_dims():
    e1, e2, e3 = {0: 1}, {1: 1}, {2: 1}
    amb = SubspaceBasis(3, [e1, e2, e3])
    assert quotient_dim(amb, amb) == 0
    assert quotient_dim(amb, SubspaceBasis(3, [])) == 3
    q = quotient_dim(SubspaceBasis(3, [e1, e2]), SubspaceBasis(3, [{0: 1, 1: 1}]))
    assert q == 1 and len(q.complement) == 1


def test_quotient_not_contained():
    with pytest.raises(SubspaceNotContained):
        quotient_dim(SubspaceBasis(3, [{0: 1}]), SubspaceBasis(3, [{1: 1}]))


def test_dependent_basis_rejected():
    with pytest.raises(DimensionMismatch):
        SubspaceBasis(2, [{0: 1}, {0: 2}])


def test_solve_in_span():
    basis = [{0: 1, 1: 1}, {1: 1}]
    assert solve_in_span(basis, {0: 2, 1: 5}) == {0: 2, 1: 3}
    assert solve_in_span(basis, {2: 1}) is None


def test_inverse_matrix():
    inv = inverse_matrix({(0, 0): 2, (0, 1): 1, (1, 1): 1}, [0, 1])
    assert inv == {(0, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2), (1, 1): 1}


def test_homology_of_short_complex():
    # k --(1)--> k --(0)--> k : H in the middle is 0
    d_in = SparseMatrix.from_dense([[1]])
    d_out = SparseMatrix(1, 1)
    assert homology_dim(d_in, d_out) == 0


def test_intersect_spans():
    keys = [0, 1, 2]
    both = intersect_spans([[{0: 1}, {1: 1}], [{1: 1}, {2: 1}]], keys)
    assert len(both) == 1 and set(both[0]) == {1}


def test_reducer_normal_forms():
    red = Reducer([{0: 1, 1: 1}])
    assert red.contains({0: 3, 1: 3})
    # e0 and -e1 are congruent modulo e0 + e1
    assert red.reduce({0: 1}) == red.reduce({1: -1}) == {1: -1}


small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_nullity_and_kernel(rows, cols, data):
    dense = [[data.draw(small) for _ in range(cols)] for _ in range(rows)]
    m = SparseMatrix.from_dense(dense)
    r, ker, img = rank_kernel_image(m)
    assert r + ker.dim == cols
    assert img.dim == r
    for v in ker.vectors:
        assert m.apply(v) == {}


def test_deterministic_bases():
    rng = random.Random(3)
    dense = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(4)]
    a = rank_kernel_image(SparseMatrix.from_dense(dense))
    b = rank_kernel_image(SparseMatrix.from_dense(dense))
    assert a[1].vectors == b[1].vectors and a[2].vectors == b[2].vectors
    assert rank(SparseMatrix.from_dense(dense)) == a[0]
