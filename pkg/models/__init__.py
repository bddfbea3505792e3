"""
Data models for files and reports.
Provides pydantic schemas for algebra files, character files and JSON reports.
"""

__version__ = "1.0.0"
