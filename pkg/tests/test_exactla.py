from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arshort.exactla import (
    Matrix,
    NoSolution,
    charpoly,
    complement_basis,
    determinant,
    format_rational,
    kernel_basis,
    parse_rational,
    poly_eval_matrix,
    rref,
    solve,
    solve_many,
)

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(min_value=0, max_value=max_rows))
    c = draw(st.integers(min_value=0, max_value=max_cols))
    data = [[draw(small) for _ in range(c)] for _ in range(r)]
    return Matrix(r, c, data)


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


def test_rank_of_known_matrix():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    assert kernel_basis(m).cols == 1


def test_zero_sized_shapes():
    z = Matrix.zeros(0, 3)
    assert z.rank() == 0
    assert kernel_basis(z).shape == (3, 3)
    assert (Matrix.zeros(2, 0) @ Matrix.zeros(0, 4)).is_zero()
    assert determinant(Matrix.zeros(0, 0)) == 1


def test_inverse_and_solve():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert m @ m.inverse() == Matrix.identity(2)
    assert solve(m, [3, 2]) == (Fraction(1), Fraction(1))
    with pytest.raises(NoSolution):
        solve(Matrix.from_rows([[1, 1], [1, 1]]), [1, 2])


def test_rational_text_roundtrip():
    for q in [Fraction(0), Fraction(-3, 7), Fraction(5)]:
        assert parse_rational(format_rational(q)) == q


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy_and_transpose(m):
    assert m.rank() == m.transpose().rank()
    assert m.rank() == to_sympy(m).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_zero_residual(m):
    k = kernel_basis(m)
    assert m.rank() + k.cols == m.cols
    assert (m @ k).is_zero()
    assert k.rank() == k.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent(m):
    r, red, piv = rref(m)
    r2, red2, piv2 = rref(red)
    assert (r, piv) == (r2, piv2)
    assert red == red2


@settings(max_examples=40, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_systems(m, data):
    x = [data.draw(small) for _ in range(m.cols)]
    b = m.apply(x)
    y = solve(m, b)
    assert m.apply(y) == b
    rhs = Matrix.from_columns([b, b], m.rows)
    assert m @ solve_many(m, rhs) == rhs


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(lambda n: st.lists(
    st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_and_charpoly_against_sympy(rows):
    m = Matrix.from_rows(rows)
    s = to_sympy(m)
    assert determinant(m) == Fraction(str(s.det()))
    x = sympy.Symbol("x")
    expected = [Fraction(str(c)) for c in s.charpoly(x).all_coeffs()]
    assert charpoly(m) == expected
    # Cayley-Hamilton
    assert poly_eval_matrix(charpoly(m), m).is_zero()


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_complement_completes_column_space(m):
    from arshort.exactla import column_space_basis
    base = column_space_basis(m)
    comp = complement_basis(base, m.rows)
    assert Matrix.hstack([base, comp], rows=m.rows).rank() == m.rows
