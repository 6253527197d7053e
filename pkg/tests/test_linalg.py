import pytest
import sympy
from hypothesis import given, settings, strategies as st

from pairforge.fields import GF, QQ
from pairforge.linalg import Subspace, kernel, mat_inverse, mat_mul, rank, solve_linear

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_and_kernel_match_sympy(m):
    M = sympy.Matrix(m)
    assert rank(m, QQ) == M.rank()
    K = kernel(m, QQ)
    assert K.dim == len(M.nullspace())
    for v in K.basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@settings(max_examples=60, deadline=None)
@given(matrices, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_linear(m, b):
    b = b[:len(m)]
    sol = solve_linear(m, b, QQ)
    M = sympy.Matrix(m)
    aug = M.row_join(sympy.Matrix(b))
    assert sol.consistent == (aug.rank() == M.rank())
    if sol.consistent:
        assert [sum(a * x for a, x in zip(row, sol.particular)) for row in m] == b


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=5),
       st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=5))
def test_subspace_intersection_dimension(us, vs):
    U = Subspace.span(QQ, 3, us)
    V = Subspace.span(QQ, 3, vs)
    W = U.intersection(V)
    S = Subspace.span(QQ, 3, list(U.basis) + list(V.basis))
    assert W.dim == U.dim + V.dim - S.dim
    assert W.issubset(U) and W.issubset(V)
    for u in U.basis:
        assert U.from_coordinates(U.coordinates(u)) == u


def test_canonical_basis_is_order_independent():
    a = Subspace.span(QQ, 3, [(1, 2, 3), (0, 1, 1)])
    b = Subspace.span(QQ, 3, [(0, 1, 1), (1, 3, 4), (2, 4, 6)])
    assert a == b


def test_inverse_over_gf():
    F = GF(5)
    m = [[F(1), F(2)], [F(3), F(4)]]
    inv = mat_inverse(m, F)
    assert mat_mul(m, inv, F) == ((F(1), F(0)), (F(0), F(1)))
    with pytest.raises(ZeroDivisionError):
        mat_inverse([[1, 2], [2, 4]], QQ)
