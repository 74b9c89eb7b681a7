"""Tests kflip/presentation and kflip/cli.py

Contents
--------
test_data/ : golden presentation of (13, 4)
test_presentation : tests assembly, tangent class, cross_check and serialization
test_cli : tests the commands and their exit codes
"""

from . import test_presentation, test_cli
