"""
Stratification, admissibility and reports.
Provides strata of q-commuting and user-declared algebras and admissibility verdicts.
"""

__version__ = "1.0.0"
