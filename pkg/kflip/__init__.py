"""A package for the complex K-ring of flip Stiefel manifolds FV_{m,2s}, s even.

Contents
--------
exact_core/
    exact_core.py
intlinalg/
    intlinalg.py
clifford/
    clifford.py
repring/
    repring.py
    laurent.py
koszul/
    koszul.py
    grobner.py
    relations.py
    solution_tables.py
    erratum_ledger.json
presentation/
    presentation.py
cli.py
utilities.py

Not Imported By Default
-----------------------
*_tests/
"""

from . import utilities
from kflip.exact_core import exact_core
from kflip.intlinalg import intlinalg
from kflip.clifford import clifford
from kflip.repring import repring, laurent
from kflip.koszul import koszul, grobner, relations, solution_tables
from kflip.presentation import presentation

__version__ = "1.0.0"
__author__ = "Emily Bentley"
