"""
Iterated q-skew Ore extensions.
Provides PBW normal-form arithmetic, the tau/delta calculus and identity checks.
"""

__version__ = "1.0.0"
