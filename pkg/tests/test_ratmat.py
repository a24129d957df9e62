from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from adhm.ratmat import (
    Matrix,
    SingularMatrixError,
    Subspace,
    as_scalar,
    column_space,
    det,
    format_scalar,
    inverse,
    kernel_basis,
    kron,
    make_rng,
    parse_scalar,
    random_invertible,
    random_matrix,
    rank,
    rank_rref,
    rref,
    solve,
)

from conftest import matrices, rationals


def to_sympy(M: Matrix):
    return sympy.Matrix(M.rows, M.cols, [sympy.Rational(v.numerator, v.denominator) for v in M.flat()])


# -- scalars -----------------------------------------------------------------

def test_scalar_parsing_and_formatting():
    assert parse_scalar("-7/2") == Fraction(-7, 2)
    assert parse_scalar(" 3 ") == 3
    assert format_scalar(Fraction(3)) == "3"
    assert format_scalar(Fraction(-7, 2)) == "-7/2"
    for bad in ("", "1.5", "1/0", "a", "1//2", "2/-3/4"):
        with pytest.raises(ValueError):
            parse_scalar(bad)


def test_floats_and_bools_are_rejected():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar(True)
    assert as_scalar(np.int64(4)) == 4


@given(rationals)
def test_scalar_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


# -- rank --------------------------------------------------------------------

def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix([[1, 2], [2, 4]])) == 1
    assert rank(Matrix.zeros(0, 3)) == 0
    assert rank(Matrix.zeros(2, 0)) == 0


def test_rank_of_random_4x6_equals_rank_of_transpose(rng):
    for _ in range(20):
        M = random_matrix(4, 6, 3, rng)
        assert rank(M) == rank(M.T)


@given(matrices(max_dim=5))
def test_rank_routes_agree_with_sympy(M):
    expected = to_sympy(M).rank() if M.rows and M.cols else 0
    assert rank(M) == rank_rref(M) == rank(M.T) == expected


@given(matrices(max_dim=4, elements=rationals))
def test_rank_with_fractional_entries(M):
    assert rank(M) == rank_rref(M)


def test_rref_shape():
    R, piv = rref(Matrix([[0, 2, 4], [1, 1, 1]]))
    assert piv == [0, 1]
    assert R == Matrix([[1, 0, -1], [0, 1, 2]])


# -- kernel and solve --------------------------------------------------------

def test_kernel_examples():
    K = kernel_basis(Matrix([[1, 2], [2, 4]]))
    assert K.dim == 1
    assert Matrix([[1, 2], [2, 4]]) @ K.basis == Matrix.zeros(2, 1)
    assert K.contains([-2, 1])
    assert kernel_basis(Matrix.identity(3)).dim == 0
    assert kernel_basis(Matrix.zeros(2, 3)).dim == 3


@given(matrices(max_dim=5))
def test_rank_nullity(M):
    K = kernel_basis(M)
    assert K.dim == M.cols - rank(M)
    assert (M @ K.basis).is_zero()
    assert rank(K.basis) == K.dim


def test_solve_examples():
    b = Matrix.column([3, -1, 2])
    assert solve(Matrix.identity(3), b) == b
    M = Matrix([[1, 2], [2, 4]])
    assert solve(M, [1, 3]) is None
    x = solve(M, [1, 2])
    assert M @ x == Matrix.column([1, 2])
    with pytest.raises(ValueError):
        solve(M, [1, 2, 3])


@given(matrices(rows=3, cols=4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_consistent_systems(M, xs):
    b = M @ Matrix.column(xs)
    x = solve(M, b)
    assert x is not None and M @ x == b


# -- determinant and inverse ---------------------------------------------------

@given(matrices(rows=4, cols=4))
def test_det_matches_sympy_and_rank(M):
    assert det(M) == to_sympy(M).det()
    assert (det(M) != 0) == (rank(M) == 4)


def test_inverse(rng):
    g = random_invertible(4, 2, rng)
    assert g @ inverse(g) == Matrix.identity(4)
    with pytest.raises(SingularMatrixError):
        inverse(Matrix([[1, 2], [2, 4]]))


# -- products ----------------------------------------------------------------

@given(matrices(rows=2, cols=3), matrices(rows=3, cols=3), matrices(rows=3, cols=2))
def test_row_major_vectorization(X, M, Y):
    # vec(X M Y) = (X kron Y^T) vec(M) in row-major order
    lhs = Matrix.column((X @ M @ Y).flat())
    rhs = kron(X, Y.T) @ Matrix.column(M.flat())
    assert lhs == rhs


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(ValueError):
        Matrix.identity(2) + Matrix.zeros(2, 3)


# -- subspaces ---------------------------------------------------------------

@given(matrices(rows=4, max_dim=4), matrices(rows=4, max_dim=4))
def test_subspace_lattice(U, V):
    SU, SV = column_space(U), column_space(V)
    total, meet = SU + SV, SU.intersect(SV)
    assert SU <= total and SV <= total
    assert meet <= SU and meet <= SV
    assert total.dim + meet.dim == SU.dim + SV.dim


@given(matrices(rows=4, max_dim=4))
def test_completion_is_invertible(M):
    S = column_space(M)
    P = S.completion()
    assert P.shape == (4, 4) and rank(P) == 4
    assert column_space(P[:, :S.dim]) == S


def test_restriction_to_invariant_subspace():
    A = Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 2]])
    S = Subspace.span(Matrix([[1], [0], [0]]))
    assert S.is_invariant(A)
    assert S.restrict(A) == Matrix([[1]])
    assert not Subspace.span(Matrix([[0], [1], [0]])).is_invariant(A)


# -- random generation -------------------------------------------------------

def test_random_matrix_contract():
    assert random_matrix(2, 2, 5, make_rng(42)) == random_matrix(2, 2, 5, make_rng(42))
    M = random_matrix(3, 3, 1, make_rng(7))
    assert set(M.flat()) <= {-1, 0, 1}
    E = random_matrix(0, 3, 5, make_rng(1))
    assert E.shape == (0, 3)
