"""
Algebra file ingestion.
Provides expression parsing and loaders for algebra and character files.
"""

__version__ = "1.0.0"
