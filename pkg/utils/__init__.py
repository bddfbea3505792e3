"""
Utility functions for the quantum solvable algebra toolkit.
Provides configuration, errors and the structured run log.
"""

__version__ = "1.0.0"
