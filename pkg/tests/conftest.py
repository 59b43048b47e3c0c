"""Shared strategies and helpers for the test suite."""
from fractions import Fraction

import hypothesis.strategies as st

from syzcurve import HPoly, Mono, QMatrix, mono_basis

coeffs = st.integers(min_value=-9, max_value=9)
nonzero_coeffs = coeffs.filter(lambda c: c != 0)


@st.composite
def hpolys(draw, degree=None, min_degree=1, max_degree=4):
    """Random nonzero homogeneous polynomial with small integer coefficients."""
    if degree is None:
        degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    basis = mono_basis(degree)
    n = len(basis)
    picks = draw(st.lists(st.integers(min_value=0, max_value=n - 1),
                          min_size=1, max_size=min(n, 6), unique=True))
    terms = {}
    for i in picks:
        terms[basis[i]] = Fraction(draw(nonzero_coeffs))
    return HPoly(degree, terms)


@st.composite
def qmatrices(draw, max_dim=5):
    rows = draw(st.integers(min_value=1, max_value=max_dim))
    cols = draw(st.integers(min_value=1, max_value=max_dim))
    entries = draw(st.lists(coeffs, min_size=rows * cols,
                            max_size=rows * cols))
    return QMatrix(rows, cols, [Fraction(e) for e in entries])


def mat_vec(m, v):
    return m.mul_vector(v)
