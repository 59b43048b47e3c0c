"""Exact rational linear algebra: rank, kernel, span membership, solving."""
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from syzcurve import QMatrix, in_span, kernel_basis, rank, solve

from conftest import coeffs, qmatrices

F = Fraction


def M(rowlists):
    return QMatrix.from_rows([[F(v) for v in row] for row in rowlists])


class TestRank:
    def test_identity(self):
        assert rank(QMatrix.identity(4)) == 4

    def test_zero(self):
        assert rank(QMatrix(3, 3, [F(0)] * 9)) == 0

    def test_dependent_rows(self):
        assert rank(M([[1, 2], [2, 4], [3, 6]])) == 1

    def test_fractional_entries(self):
        m = QMatrix(2, 2, [F(1, 2), F(1, 3), F(1, 5), F(1)])
        assert rank(m) == 2
        # and a genuinely singular fractional matrix
        assert rank(QMatrix(2, 2, [F(1, 2), F(1, 3), F(3, 2), F(1)])) == 1

    def test_known_rank_two(self):
        assert rank(M([[1, 0, 1], [0, 1, 1], [1, 1, 2]])) == 2

    @given(qmatrices())
    @settings(max_examples=60)
    def test_rank_equals_transpose_rank(self, m):
        assert rank(m) == rank(m.transpose())

    @given(qmatrices())
    @settings(max_examples=60)
    def test_rank_bounded(self, m):
        assert 0 <= rank(m) <= min(m.rows, m.cols)


class TestKernel:
    def test_identity_kernel_trivial(self):
        assert kernel_basis(QMatrix.identity(3)) == []

    def test_known_kernel(self):
        # x + y + z = 0 has a two-dimensional solution space
        ker = kernel_basis(M([[1, 1, 1]]))
        assert len(ker) == 2

    @given(qmatrices())
    @settings(max_examples=60)
    def test_rank_nullity(self, m):
        assert rank(m) + len(kernel_basis(m)) == m.cols

    @given(qmatrices())
    @settings(max_examples=60)
    def test_kernel_vectors_annihilate(self, m):
        for v in kernel_basis(m):
            assert all(x == 0 for x in m.mul_vector(v))
            assert any(x != 0 for x in v)

    def test_kernel_deterministic(self):
        m = M([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]])
        assert kernel_basis(m) == kernel_basis(m)


class TestSpanAndSolve:
    def test_in_span_true(self):
        # the two columns span a plane inside Q^3
        m = QMatrix.from_columns([[1, 0, 1], [0, 1, 1]])
        assert in_span([F(1), F(1), F(2)], m)
        assert not in_span([F(0), F(0), F(1)], m)

    def test_solve_exact(self):
        m = M([[2, 1], [1, 3]])
        x = solve(m, [F(5), F(10)])
        assert x is not None
        assert m.mul_vector(x) == [F(5), F(10)]

    def test_solve_inconsistent(self):
        m = M([[1, 1], [1, 1]])
        assert solve(m, [F(0), F(1)]) is None

    @given(qmatrices(), st.data())
    @settings(max_examples=60)
    def test_solve_recovers_image_vector(self, m, data):
        x = [F(data.draw(coeffs)) for _ in range(m.cols)]
        b = m.mul_vector(x)
        y = solve(m, b)
        assert y is not None
        assert m.mul_vector(y) == b

    @given(qmatrices(), st.data())
    @settings(max_examples=60)
    def test_in_span_consistent_with_solve(self, m, data):
        v = [F(data.draw(coeffs)) for _ in range(m.rows)]
        assert in_span(v, m) == (solve(m, v) is not None)
