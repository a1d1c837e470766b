"""
Main entry point for the symmetric h⁰ engine.

This module provides an alternative entry point to `python -m src.cli`.
"""
import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
