import sympy

import hypothesis.strategies as st
from hypothesis import given, assume, settings

from kflip.clifford import clifford as cl
from kflip.exact_core.exact_core import QSqrt2


def to_sympy(matrix):
    for row in matrix:
        for x in row:
            assert x.is_rational()
    return sympy.Matrix(
        [[sympy.Rational(x.a.numerator, x.a.denominator) for x in row] for row in matrix]
    )


@settings(deadline=None)
@given(st.integers(2, 5).flatmap(
    lambda m: st.lists(st.integers(-6, 6), min_size=m, max_size=m)))
def test_with_hypothesis_projection_of_vector_is_reflection(coords):
    assume(any(x != 0 for x in coords))
    m = len(coords)

    P = to_sympy(cl.twisted_projection(cl.vector(m, coords)))

    assert P * P.T == sympy.eye(m)
    assert P.det() == -1
    # the vector itself is sent to its negative
    assert P * sympy.Matrix(coords) == -sympy.Matrix(coords)


@settings(deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_with_hypothesis_product_of_vectors_lands_in_grades_zero_and_two(x, y):
    assume(any(a != 0 for a in x) and any(b != 0 for b in y))

    product = cl.vector(3, x) * cl.vector(3, y)

    assert set(product.grades()) <= {0, 2}
    assert product.scalar_part() == QSqrt2(-sum(a * b for a, b in zip(x, y)))
    assert product * cl.cl_invert(product) == 1
