"""Contents: exact_core.py module

Exact integer helpers (binomials, gcds, Bezout coefficients, unimodular
completion, 2-adic valuations) and the QSqrt2 number type.
"""
