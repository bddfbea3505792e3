"""
Command-line interface for the quantum solvable algebra toolkit.
Provides one workflow per subcommand.
"""

__version__ = "1.0.0"
