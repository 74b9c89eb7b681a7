"""Contents: presentation.py module

Assembles the presentation of each case and runs the full cross-check; the
command line in kflip/cli.py is a thin layer over it.
"""
