"""Contents: clifford.py module

Exact Clifford algebra arithmetic over Q(sqrt 2): omega, the twisted
projection onto SO(m), the conjugating element h and the maximal tori.
"""
