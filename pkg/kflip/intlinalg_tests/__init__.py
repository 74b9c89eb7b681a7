"""Tests kflip/intlinalg

Contents
--------
test_intlinalg : tests normal forms, kernels, quotients and lattice tests,
    including the 1000-matrix normal form sweep
test_intlinalg_with_hypothesis : randomized postcondition checks using the
    hypothesis library
"""

from . import test_intlinalg, test_intlinalg_with_hypothesis
