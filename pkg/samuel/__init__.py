"""Samuel computes Hilbert-Samuel functions, Hilbert coefficients, Sally-module lengths, reduction numbers and Ratliff-Rush closures of m-primary ideals, and checks them against the known structure theorems for ideals with small first Hilbert coefficient."""

__version__ = '0.1.0'
