"""Tests kflip/koszul

Contents
--------
test_koszul : tests the complex, H0, H1, H2 and the wedge product
test_grobner : tests the leading term selection of kernel generators
test_relations : tests the relation tables on the parameter grid
test_solution_tables : tests the printed kernel elements for (13, 4)
test_koszul_with_hypothesis : cycles and boundaries on random vectors
"""

from . import test_koszul, test_grobner, test_relations, test_solution_tables, test_koszul_with_hypothesis
