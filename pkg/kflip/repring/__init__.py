"""Contents: repring.py and laurent.py modules

repring.py holds the case parameters, the quotient ring B and the closed-form
restriction images; laurent.py recomputes the images from Laurent polynomials.
"""
