"""JSON API over the verification suites."""

from .app import app

__all__ = ['app']
