"""Tests kflip/clifford

Contents
--------
test_clifford : tests the algebra relations, omega, h and the tori
test_clifford_with_hypothesis : reflection and product properties on random
    vectors
"""

from . import test_clifford, test_clifford_with_hypothesis
