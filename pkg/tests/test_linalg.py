from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from flathol.linalg import (
    DimensionMismatch,
    Matrix,
    image,
    intersect_spaces,
    kernel,
    rref_basis,
    solve_linear,
    sum_spaces,
)

A4 = Matrix([[0, -1, 1, 0], [0, 0, 0, 1], [0, 0, 0, 1], [0, 0, 0, 0]])


scalars = st.one_of(
    st.integers(min_value=-4, max_value=4),
    st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3)),
)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(scalars, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(Matrix)
        )
    )


def vector_lists(dim, max_count=4):
    return st.lists(
        st.lists(scalars, min_size=dim, max_size=dim).map(tuple),
        min_size=0,
        max_size=max_count,
    )


def test_rref_basis_examples():
    assert rref_basis([(2, 0), (0, 0)], 2).basis == ((1, 0),)
    assert rref_basis([(1, 1), (1, -1)], 2).basis == ((1, 0), (0, 1))
    # row-reduce by hand: third vector supplies the leading 1 in column 0
    assert rref_basis([(0, 1, 1, 0), (0, 2, 2, 0), (1, 0, 0, 0)], 4).basis == (
        (1, 0, 0, 0),
        (0, 1, 1, 0),
    )


def test_rref_basis_rejects_ragged_input():
    with pytest.raises(DimensionMismatch):
        rref_basis([(1, 0), (1, 0, 0)], 2)


def test_kernel_examples():
    assert kernel(Matrix([[1, 0], [0, 0]])).basis == ((0, 1),)
    assert kernel(Matrix.zeros(2, 2)).dim == 2
    assert kernel(A4).basis == ((1, 0, 0, 0), (0, 1, 1, 0))


def test_image_examples():
    assert image(Matrix.identity(3)).dim == 3
    assert image(Matrix.zeros(2, 2)).is_zero()
    assert image(A4).basis == ((1, 0, 0, 0), (0, 1, 1, 0))
    assert image(A4) == kernel(A4)


def test_sum_intersect_examples():
    e = lambda i: tuple(1 if j == i else 0 for j in range(3))
    s12 = rref_basis([e(0), e(1)], 3)
    s23 = rref_basis([e(1), e(2)], 3)
    assert intersect_spaces(s12, s23).basis == ((0, 1, 0),)
    zero = rref_basis([], 3)
    assert sum_spaces(s12, zero) == s12
    assert intersect_spaces(s12, s12) == s12
    both = intersect_spaces(image(A4), kernel(A4))
    assert both.basis == ((1, 0, 0, 0), (0, 1, 1, 0))


def test_solve_examples():
    assert solve_linear(Matrix.identity(2), (3, 4)) == (3, 4)
    assert solve_linear(Matrix.zeros(2, 2), (1, 0)) is None
    x = solve_linear(A4, (-1, 0, 0, 0))
    assert x is not None and A4.matvec(x) == (-1, 0, 0, 0)
    # canonical: free variables (columns 0 and 2) are zero
    assert x == (0, 1, 0, 0)


def test_matrix_inverse_roundtrip():
    m = Matrix([[1, 2, 0], [0, 1, 5], [2, 0, 1]])
    assert m @ m.inverse() == Matrix.identity(3)
    with pytest.raises(ValueError):
        Matrix([[1, 1], [1, 1]]).inverse()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_exact(m):
    assert kernel(m).dim + image(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: vector_lists(d).map(lambda vs: (d, vs))))
def test_rref_canonical_idempotent_and_invariant(case):
    dim, vs = case
    space = rref_basis(vs, dim)
    assert rref_basis(space.basis, dim) == space
    assert rref_basis(list(reversed(vs)), dim) == space
    assert rref_basis([tuple(3 * x for x in v) for v in vs], dim) == space


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda d: st.tuples(st.just(d), vector_lists(d), vector_lists(d))
    )
)
def test_modularity_of_dimensions(case):
    dim, va, vb = case
    s1, s2 = rref_basis(va, dim), rref_basis(vb, dim)
    total = sum_spaces(s1, s2)
    meet = intersect_spaces(s1, s2)
    assert total.dim + meet.dim == s1.dim + s2.dim
    assert total.contains_space(s1) and total.contains_space(s2)
    assert s1.contains_space(meet) and s2.contains_space(meet)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(scalars, min_size=1, max_size=4))
def test_solve_iff_in_image(m, coeffs):
    coeffs = (coeffs * m.cols)[: m.cols]
    b = m.matvec(tuple(coeffs))
    x = solve_linear(m, b)
    assert x is not None and m.matvec(x) == b
    # and a vector outside the image has no solution
    im = image(m)
    if im.dim < m.rows:
        outside = next(
            v
            for v in (tuple(1 if j == i else 0 for j in range(m.rows)) for i in range(m.rows))
            if not im.contains(v)
        )
        assert solve_linear(m, outside) is None


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_kernel_image_match_sympy(m):
    sm = sympy.Matrix([[sympy.Rational(x) for x in row] for row in m.entries])
    assert image(m).dim == sm.rank()
    ker = kernel(m)
    assert ker.dim == m.cols - sm.rank()
    for v in ker.basis:
        assert all(x == 0 for x in m.matvec(v))
    for nv in sm.nullspace():
        vec = tuple(Fraction(x.p, x.q) for x in nv)
        assert ker.contains(vec)
