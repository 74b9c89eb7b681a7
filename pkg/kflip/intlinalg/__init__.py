"""Contents: intlinalg.py module

Hermite and Smith normal forms, kernels, integer solving, lattice tests and
abelian group presentations. Backend for every homology computation.
"""
