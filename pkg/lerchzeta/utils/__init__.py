"""Utility functions for lerchzeta."""

from lerchzeta.utils.logconfig import configure_logging

__all__ = ["configure_logging"]
