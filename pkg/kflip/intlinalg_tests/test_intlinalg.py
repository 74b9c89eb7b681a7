"""Tests for all the functions in intlinalg.py"""

import itertools

import numpy as np
import pytest

from kflip.intlinalg import intlinalg as ila


def is_row_hnf(H):
    last_pivot = -1
    seen_zero_row = False
    for k, row in enumerate(H):
        nonzero = [j for j, x in enumerate(row) if x != 0]
        if len(nonzero) == 0:
            seen_zero_row = True
            continue
        if seen_zero_row:
            return False
        pivot_col = nonzero[0]
        pivot = row[pivot_col]
        if pivot_col <= last_pivot or pivot <= 0:
            return False
        for above in H[:k]:
            if not 0 <= above[pivot_col] < pivot:
                return False
        last_pivot = pivot_col
    return True


def check_smith(M):
    S, U, V = ila.smith_normal_form(M)
    assert ila.mat_mul(ila.mat_mul(U, M), V) == S
    assert abs(ila.determinant(U)) == 1
    assert abs(ila.determinant(V)) == 1

    diagonal = ila.smith_diagonal(M)
    for i, row in enumerate(S):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    for d in diagonal:
        assert d >= 0
    for d, e in zip(diagonal, diagonal[1:]):
        if d == 0:
            assert e == 0
        else:
            assert e % d == 0


def test_hermite_normal_form_examples():
    H, U = ila.hermite_normal_form(ila.identity(3))
    assert H == ila.identity(3)
    assert U == ila.identity(3)

    M = [[2, 4], [0, 3]]
    H, U = ila.hermite_normal_form(M)
    assert H == [[2, 1], [0, 3]]
    assert ila.mat_mul(U, M) == H
    assert abs(ila.determinant(U)) == 1

    H, U = ila.hermite_normal_form([[0, 0], [0, 0]])
    assert H == [[0, 0], [0, 0]]
    assert U == ila.identity(2)

    M = [[3, 5, 7], [-6, 1, 0], [9, 0, 2], [0, 0, 4]]
    H, U = ila.hermite_normal_form(M)
    assert is_row_hnf(H)
    assert ila.mat_mul(U, M) == H


def test_smith_normal_form_examples():
    assert ila.smith_normal_form([[6, 0], [0, 4]])[0] == [[2, 0], [0, 12]]
    assert ila.smith_normal_form(ila.identity(2))[0] == ila.identity(2)
    assert ila.smith_normal_form([[2, 0], [0, 0]])[0] == [[2, 0], [0, 0]]
    assert ila.smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]

    for M in ([[6, 0], [0, 4]], [[0, 0, 3], [0, 5, 0]], [[4, 2], [2, 4], [6, 6]], [[0]]):
        check_smith(M)


def test_kernel_basis_examples():
    assert ila.kernel_basis([[1, 1]]) == [[1], [-1]]
    assert ila.kernel_basis([[2, 4]]) == [[2], [-1]]
    assert ila.kernel_basis(ila.identity(2)) == [[], []]
    assert ila.kernel_basis([], ncols=2) == [[1, 0], [0, 1]]


def test_kernel_basis_is_saturated():
    M = [[2, 4, 6, 8], [1, 3, 5, 7]]
    K = ila.kernel_basis(M)
    assert len(K) == 4
    assert len(K[0]) == 2
    assert ila.mat_mul(M, K) == [[0, 0], [0, 0]]
    assert ila.smith_diagonal(K) == [1, 1]


def test_solve_integer():
    M = [[2, 0], [0, 3]]
    assert ila.solve_integer(M, [4, 9]) == [2, 3]
    assert ila.solve_integer(M, [1, 0]) is None

    M = [[1, 2, 3], [4, 5, 6]]
    x = ila.solve_integer(M, [6, 15])
    assert ila.mat_vec(M, x) == [6, 15]


def test_quotient_presentation_examples():
    assert ila.quotient_presentation(ila.identity(2), [[2, 0], [0, 3]]).invariant_factors == [6]

    free = ila.quotient_presentation(ila.identity(1), None)
    assert free.invariant_factors == [0]
    assert free.free_rank == 1
    assert free.describe() == "Z"

    sub = ila.quotient_presentation([[2, 0], [0, 1]], [[2], [0]])
    assert sub.invariant_factors == [0]

    # dependent generators contribute their own relations
    dependent = ila.quotient_presentation([[1, 2]], None, labels=["a", "b"])
    assert dependent.invariant_factors == [0]
    assert dependent.generator_labels == ["a", "b"]

    with pytest.raises(RuntimeError):
        ila.quotient_presentation([[2], [0]], [[1], [0]])


def brute_force_killed_count(R, k):
    """Count classes x of Z^n / (columns of R) with k*x = 0, by enumeration."""

    H = ila.hermite_normal_form(ila.transpose(R))[0]
    diagonal = [H[i][i] for i in range(len(R))]
    count = 0
    for x in itertools.product(*[range(h) for h in diagonal]):
        if ila.lattice_contains(R, [k * xi for xi in x]):
            count += 1
    return count


def test_quotient_presentation_against_enumeration():
    for R in ([[2, 0], [0, 3]], [[4, 2], [2, 4]], [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]):
        presentation = ila.quotient_presentation(ila.identity(len(R)), R)
        assert presentation.order() == abs(ila.determinant(R))
        for k in range(1, 13):
            expected = 1
            for d in presentation.torsion:
                expected *= int(np.gcd(k, d))
            assert brute_force_killed_count(R, k) == expected


def test_element_order():
    relations = [[2, 0], [0, 64]]
    assert ila.element_order(relations, [0, 1]) == 64
    assert ila.element_order(relations, [0, 2]) == 32
    assert ila.element_order(relations, [1, 0]) == 2
    assert ila.element_order([[2], [0]], [0, 1]) == 0

    presentation = ila.AbelianPresentation(["a", "b"], relations)
    assert presentation.order_of([1, 1]) == 64
    assert presentation.describe() == "Z/2 + Z/64"


def test_lattice_equal():
    assert ila.lattice_equal(ila.identity(2), ila.identity(2))
    assert not ila.lattice_equal([[1], [0]], [[2], [0]])
    assert ila.lattice_equal([[2, 1], [1, 1]], ila.identity(2))
    assert ila.lattice_equal([[1, 2], [0, 0]], [[1], [0]])

    with pytest.raises(RuntimeError):
        ila.lattice_equal([[1]], [[1], [0]])


def test_normal_forms_thousand_random_matrices():
    rng = np.random.default_rng(20240417)
    for _ in range(1000):
        nrows = int(rng.integers(1, 9))
        ncols = int(rng.integers(1, 17))
        M = [[int(x) for x in row]
             for row in rng.integers(-10**9, 10**9 + 1, size=(nrows, ncols))]

        H, U = ila.hermite_normal_form(M)
        assert ila.mat_mul(U, M) == H
        assert is_row_hnf(H)
        check_smith(M)
