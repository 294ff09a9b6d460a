"""
n-Angulation Verifier Package
Bounded verification of n-angulated structures on finitely presented additive categories over F_p.
"""

__version__ = "1.0.0"
__author__ = "n-Angulation Verifier Team"
