"""
Quantum tori (twisted Laurent polynomial algebras).
Provides normal-form arithmetic, centers and the A tensor Z decomposition.
"""

__version__ = "1.0.0"
