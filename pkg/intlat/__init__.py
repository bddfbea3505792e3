"""
Integer matrix and lattice algorithms.
Provides Smith and alternating normal forms, kernels, congruence lifting and minor tests.
"""

__version__ = "1.0.0"
