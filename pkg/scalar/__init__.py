"""
Exact coefficient arithmetic.
Provides Q(eps) scalars, Laurent polynomials in q, q-combinatorics and linear algebra.
"""

__version__ = "1.0.0"
