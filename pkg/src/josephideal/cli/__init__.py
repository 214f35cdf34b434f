"""Command-line interface for josephideal."""

from .app import JosephCLI, main

__all__ = ['JosephCLI', 'main']
