import math

import hypothesis.strategies as st
from hypothesis import given, settings
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from kflip.intlinalg import intlinalg as ila


@st.composite
def int_matrices(draw, max_rows=5, max_cols=6, bound=50):
    nrows = draw(st.integers(1, max_rows))
    ncols = draw(st.integers(1, max_cols))
    row = st.lists(st.integers(-bound, bound), min_size=ncols, max_size=ncols)
    return draw(st.lists(row, min_size=nrows, max_size=nrows))


@settings(max_examples=1000, deadline=None)
@given(int_matrices(max_rows=8, max_cols=16, bound=10**9))
def test_with_hypothesis_hermite_normal_form(M):
    H, U = ila.hermite_normal_form(M)

    assert ila.mat_mul(U, M) == H
    assert abs(ila.determinant(U)) == 1
    for row, next_row in zip(H, H[1:]):
        if all(x == 0 for x in row):
            assert all(x == 0 for x in next_row)

    pivots = []
    for i, row in enumerate(H):
        nonzero = [j for j, x in enumerate(row) if x != 0]
        if len(nonzero) == 0:
            break
        j = nonzero[0]
        assert row[j] > 0
        assert all(0 <= H[k][j] < row[j] for k in range(i))
        pivots.append(j)
    assert pivots == sorted(set(pivots))


@settings(max_examples=1000, deadline=None)
@given(int_matrices(max_rows=8, max_cols=16, bound=10**9))
def test_with_hypothesis_smith_normal_form(M):
    S, U, V = ila.smith_normal_form(M)

    assert ila.mat_mul(ila.mat_mul(U, M), V) == S
    assert all(x == 0 for i, row in enumerate(S) for j, x in enumerate(row) if i != j)
    assert abs(ila.determinant(U)) == 1
    assert abs(ila.determinant(V)) == 1

    diagonal = ila.smith_diagonal(M)
    nonzero = [d for d in diagonal if d != 0]
    assert diagonal[:len(nonzero)] == nonzero
    for d, e in zip(nonzero, nonzero[1:]):
        assert d > 0
        assert e % d == 0


@given(int_matrices())
def test_with_hypothesis_smith_diagonal_matches_sympy(M):
    expected = invariant_factors(DomainMatrix([[ZZ(x) for x in row] for row in M], (len(M), len(M[0])), ZZ))

    ours = [d for d in ila.smith_diagonal(M) if d != 0]
    theirs = [abs(int(d)) for d in expected if d != 0]

    assert len(ours) == len(theirs)
    assert math.prod(ours) == math.prod(theirs)


@settings(max_examples=1000, deadline=None)
@given(int_matrices(max_rows=8, max_cols=16, bound=10**9))
def test_with_hypothesis_kernel_basis(M):
    K = ila.kernel_basis(M)
    ncols = len(M[0])

    assert len(K) == ncols
    rank = len([d for d in ila.smith_diagonal(M) if d != 0])
    assert len(K[0]) == ncols - rank
    if len(K[0]) > 0:
        assert all(x == 0 for row in ila.mat_mul(M, K) for x in row)
        # saturated: Z^n / kernel is torsion free
        assert all(d == 1 for d in ila.smith_diagonal(K))


@settings(deadline=None)
@given(int_matrices(max_rows=4, max_cols=4, bound=20),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_with_hypothesis_solve_integer(M, coeffs):
    x = coeffs[:len(M[0])]
    b = ila.mat_vec(M, x)

    solution = ila.solve_integer(M, b)

    assert solution is not None
    assert ila.mat_vec(M, solution) == b
    assert ila.lattice_contains(M, b)


@settings(deadline=None)
@given(int_matrices(max_rows=3, max_cols=3, bound=12), st.integers(1, 12))
def test_with_hypothesis_element_order(R, k):
    vector = [k] + [0] * (len(R) - 1)
    order = ila.element_order(R, vector)

    if order > 0:
        assert ila.lattice_contains(R, [order * x for x in vector])
        for smaller in range(1, order):
            assert not ila.lattice_contains(R, [smaller * x for x in vector])
    else:
        for multiple in range(1, 13):
            assert not ila.lattice_contains(R, [multiple * x for x in vector])
