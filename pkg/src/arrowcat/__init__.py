"""Arrow categories of matrix categories, built and checked in exact arithmetic."""

__version__ = "0.1.0"
