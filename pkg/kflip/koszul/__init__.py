"""Contents: koszul.py, grobner.py, relations.py and solution_tables.py modules

koszul.py builds the complex over B and computes its homology; grobner.py
selects kernel generators by leading terms; relations.py evaluates the
relation tables of the four cases; solution_tables.py checks the printed
kernel elements of the OddZero case. erratum_ledger.json lists the printed
formulas known to disagree with the computation.
"""
