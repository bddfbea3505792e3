"""
Representations of quantum tori at roots of unity.
Provides clock/shift blocks, irreducible representations and their verification.
"""

__version__ = "1.0.0"
