"""Tests kflip/repring

Contents
--------
test_repring : tests case parameters, B, the restriction images and the change of generators
test_laurent : tests the Laurent recomputation against the closed forms
test_repring_with_hypothesis : ring identities on random elements of B
"""

from . import test_repring, test_laurent, test_repring_with_hypothesis
