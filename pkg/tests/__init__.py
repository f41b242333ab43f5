"""
Test suite for the Randić energy toolkit.

Covers graph construction, exact polynomials, spectra, permanents, the
cubic catalog, the closed-form families and the command line.
"""
