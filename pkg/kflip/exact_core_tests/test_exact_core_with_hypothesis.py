from fractions import Fraction

import pytest
import sympy

import hypothesis
import hypothesis.strategies as st
from hypothesis import given, assume, settings

from kflip.exact_core import exact_core as ec


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
qsqrt2_values = st.builds(ec.QSqrt2, rationals, rationals)


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-10**9, 10**9), min_size=1, max_size=8))
def test_with_hypothesis_bezout_coeffs(xs):
    assume(any(x != 0 for x in xs))

    g, coeffs = ec.bezout_coeffs(xs)

    assert g == ec.gcd_list(xs)
    assert g > 0
    assert sum(c * x for c, x in zip(coeffs, xs)) == g
    assert ec.gcd_list(coeffs) == 1


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-10**6, 10**6), min_size=2, max_size=6))
def test_with_hypothesis_unimodular_completion(row):
    assume(any(x != 0 for x in row))
    g = ec.gcd_list(row)
    row = [x // g for x in row]

    completion = ec.unimodular_completion(row)

    assert completion[0] == row
    assert all(len(r) == len(row) for r in completion)
    assert abs(sympy.Matrix(completion).det()) == 1


@given(st.integers(-10**12, 10**12))
def test_with_hypothesis_two_adic_split(x):
    assume(x != 0)

    v, odd = ec.two_adic_split(x)

    assert odd % 2 == 1
    assert 2**v * odd == x


@given(qsqrt2_values, qsqrt2_values, qsqrt2_values)
def test_with_hypothesis_qsqrt2_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x

    if not x.is_zero():
        assert x * x.inverse() == 1
        assert (y / x) * x == y
