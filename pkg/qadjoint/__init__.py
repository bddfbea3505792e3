"""
Specialization at q = eps and the quantum adjoint action.
Provides D_u, theta, big delta, Poisson brackets and Poisson ranks.
"""

__version__ = "1.0.0"
