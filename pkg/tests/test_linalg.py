"""Unit tests for the exact linear algebra layer."""

import math

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from cssplab.errors import SelectionError, ShapeError, SingularMatrixError
from cssplab.linalg import (
    RatMatrix,
    frobenius_sq,
    invert,
    is_strictly_column_diagonally_dominant,
    matmul,
    projection_residual_sq,
    pseudoinverse_full_rank,
    rref,
)
from cssplab.rational import Rational as R
from cssplab.rational import ZERO


def mat(rows):
    return RatMatrix.from_rows(rows)


rationals = st.builds(R, st.integers(-9, 9), st.integers(1, 9))


def matrices(n_rows, n_cols):
    return st.lists(
        st.lists(rationals, min_size=n_cols, max_size=n_cols),
        min_size=n_rows,
        max_size=n_rows,
    ).map(mat)


def any_matrix(max_dim=4):
    return st.tuples(
        st.integers(1, max_dim), st.integers(1, max_dim)
    ).flatmap(lambda rc: matrices(rc[0], rc[1]))


# ---------------------------------------------------------------------------
# frobenius_sq


def test_frobenius_zero_matrix():
    assert frobenius_sq(RatMatrix.zeros(3, 3)) == 0


def test_frobenius_identity():
    assert frobenius_sq(RatMatrix.identity(3)) == 3


def test_frobenius_fractions():
    # (1/2)^2 + (1/3)^2 = 1/4 + 1/9 = 13/36
    assert frobenius_sq(mat([[R(1, 2), R(1, 3)]])) == R(13, 36)


# ---------------------------------------------------------------------------
# matmul


def test_matmul_identity():
    X = mat([[1, 2], [3, 4]])
    assert matmul(RatMatrix.identity(2), X).data == X.data


def test_matmul_annihilator():
    X = mat([[1, 2], [3, 4]])
    assert matmul(X, RatMatrix.zeros(2, 2)).data == RatMatrix.zeros(2, 2).data


def test_matmul_hand_product():
    # (1 2) . (3 4)^T = 11
    a = mat([[1, 2]])
    b = mat([[3], [4]])
    assert matmul(a, b).data == ((R(11),),)


def test_matmul_dimension_mismatch():
    with pytest.raises(ShapeError):
        matmul(mat([[1, 2]]), mat([[1, 2]]))


def test_matmul_labels():
    a = RatMatrix.from_rows([[1, 0]], rows=["r"], cols=["x", "y"])
    b = RatMatrix.from_rows([[2], [3]], rows=["x", "y"], cols=["c"])
    prod = matmul(a, b)
    assert prod.rows == ("r",) and prod.cols == ("c",)


# ---------------------------------------------------------------------------
# invert


def test_invert_identity():
    assert invert(RatMatrix.identity(4)) == RatMatrix.identity(4)


def test_invert_diagonal():
    inv = invert(mat([[2, 0], [0, 4]]))
    assert inv.data == ((R(1, 2), ZERO), (ZERO, R(1, 4)))


def test_invert_singular():
    with pytest.raises(SingularMatrixError):
        invert(mat([[1, 1], [1, 1]]))


def test_invert_non_square():
    with pytest.raises(ShapeError):
        invert(mat([[1, 2, 3]]))


def test_invert_roundtrip():
    M = mat([[1, 2, 0], [0, 1, R(1, 3)], [5, 0, 1]])
    assert matmul(M, invert(M)).data == RatMatrix.identity(3).data


# ---------------------------------------------------------------------------
# rref


def test_rref_identity():
    reduced, pivots = rref(RatMatrix.identity(2))
    assert reduced == RatMatrix.identity(2)
    assert pivots == (0, 1)


def test_rref_rank_one():
    reduced, pivots = rref(mat([[1, 2], [2, 4]]))
    assert reduced.data == ((R(1), R(2)), (ZERO, ZERO))
    assert pivots == (0,)


def test_rref_zero_matrix():
    reduced, pivots = rref(RatMatrix.zeros(2, 3))
    assert reduced.data == RatMatrix.zeros(2, 3).data
    assert pivots == ()


# ---------------------------------------------------------------------------
# pseudoinverse


def test_pinv_identity():
    assert pseudoinverse_full_rank(RatMatrix.identity(3)) == RatMatrix.identity(3)


def test_pinv_unit_column():
    S = mat([[1], [0], [0]])
    assert pseudoinverse_full_rank(S).data == ((R(1), ZERO, ZERO),)


def test_pinv_ones_column():
    S = mat([[1], [1]])
    assert pseudoinverse_full_rank(S).data == ((R(1, 2), R(1, 2)),)


def test_pinv_rank_deficient():
    with pytest.raises(SingularMatrixError):
        pseudoinverse_full_rank(mat([[1, 1], [1, 1]]))


def test_pinv_reproduces_matrix():
    S = mat([[1, 0], [2, 1], [0, 3]])
    assert matmul(S, matmul(pseudoinverse_full_rank(S), S)) == S


# ---------------------------------------------------------------------------
# projection residual


def test_projection_residual_complement():
    assert projection_residual_sq(RatMatrix.identity(2), [0]) == 1


def test_projection_residual_full_span():
    M = mat([[1, 2, 3], [0, R(1, 2), 5]])
    assert projection_residual_sq(M, range(3)) == 0


def test_projection_residual_invalid_position():
    with pytest.raises(SelectionError):
        projection_residual_sq(RatMatrix.identity(2), [5])


def test_projection_residual_empty_selection():
    M = mat([[1, 2], [3, 4]])
    assert projection_residual_sq(M, []) == frobenius_sq(M)


def test_projection_residual_zero_column_selection():
    M = mat([[0, 1], [0, 2]])
    assert projection_residual_sq(M, [0]) == frobenius_sq(M)


def test_projection_residual_repeated_positions():
    M = mat([[1, 0, 2], [0, 1, 3]])
    assert projection_residual_sq(M, [0, 0]) == projection_residual_sq(M, [0])


# ---------------------------------------------------------------------------
# diagonal dominance


def test_dominant_identity():
    assert is_strictly_column_diagonally_dominant(RatMatrix.identity(3))


def test_dominant_counterexample():
    assert not is_strictly_column_diagonally_dominant(mat([[1, 2], [2, 1]]))


def test_dominant_example():
    assert is_strictly_column_diagonally_dominant(mat([[3, 1], [1, 3]]))


def test_dominant_requires_square():
    with pytest.raises(ShapeError):
        is_strictly_column_diagonally_dominant(mat([[1, 2, 3]]))


def test_dominant_needs_positive_diagonal():
    # the predicate compares the diagonal entry itself, not its magnitude
    assert not is_strictly_column_diagonally_dominant(mat([[-5, 0], [0, -5]]))


# ---------------------------------------------------------------------------
# properties

hyp = settings(
    max_examples=50, deadline=None, suppress_health_check=[HealthCheck.filter_too_much]
)


def _canonical(x):
    num, den = int(x.numerator), int(x.denominator)
    return den > 0 and math.gcd(abs(num), den) == 1


@given(any_matrix())
@hyp
def test_results_are_canonical(M):
    for row in rref(M)[0].data:
        for x in row:
            assert _canonical(x)
    assert _canonical(frobenius_sq(M))


@given(st.integers(2, 4).flatmap(lambda n: matrices(n, n)))
@hyp
def test_invert_roundtrip_property(M):
    try:
        inv = invert(M)
    except SingularMatrixError:
        assume(False)
    ident = RatMatrix.identity(M.n_rows)
    assert matmul(M, inv).data == ident.data
    assert matmul(inv, M).data == ident.data


@given(
    st.tuples(st.integers(2, 4), st.integers(1, 3)).flatmap(
        lambda rc: matrices(rc[0], min(rc[0], rc[1]))
    )
)
@hyp
def test_projector_idempotent_and_symmetric(S):
    try:
        P = matmul(S, pseudoinverse_full_rank(S))
    except SingularMatrixError:
        assume(False)
    assert matmul(P, P).data == P.data
    assert P.transpose().data == P.data


@given(any_matrix(), st.data())
@hyp
def test_residual_monotone_under_column_addition(M, data):
    cols = list(range(M.n_cols))
    small = data.draw(st.lists(st.sampled_from(cols), max_size=M.n_cols, unique=True))
    extra = data.draw(st.lists(st.sampled_from(cols), max_size=M.n_cols, unique=True))
    large = small + [j for j in extra if j not in small]
    assert projection_residual_sq(M, large) <= projection_residual_sq(M, small)


@given(any_matrix(), st.data())
@hyp
def test_residual_ignores_duplicated_columns(M, data):
    sel = data.draw(
        st.lists(st.sampled_from(range(M.n_cols)), min_size=1, max_size=M.n_cols, unique=True)
    )
    assert projection_residual_sq(M, sel + [sel[0]]) == projection_residual_sq(M, sel)


@given(any_matrix(), st.data())
@hyp
def test_residual_splits_per_column(M, data):
    sel = data.draw(
        st.lists(st.sampled_from(range(M.n_cols)), min_size=1, max_size=M.n_cols, unique=True)
    )
    total = projection_residual_sq(M, sel)
    k = len(sel)
    acc = ZERO
    for j in range(M.n_cols):
        # selected columns followed by column j alone; the residual of that
        # matrix against its leading block is column j's own residual
        aug = [[row[p] for p in sel] + [row[j]] for row in M.data]
        acc += projection_residual_sq(RatMatrix.from_rows(aug), range(k))
    assert acc == total


@given(st.integers(1, 4), st.data())
@hyp
def test_dominance_implies_invertible(n, data):
    entries = [[data.draw(rationals) for _ in range(n)] for _ in range(n)]
    for j in range(n):
        off = sum(abs(entries[i][j]) for i in range(n) if i != j)
        entries[j][j] = off + R(1, data.draw(st.integers(1, 5)))
    D = mat(entries)
    assert is_strictly_column_diagonally_dominant(D)
    invert(D)  # must not raise
