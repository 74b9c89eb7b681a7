"""Tests kflip/exact_core

Contents
--------
test_exact_core : tests individual functions and QSqrt2 arithmetic
test_exact_core_with_hypothesis : randomized checks using the hypothesis library
"""

from . import test_exact_core, test_exact_core_with_hypothesis
