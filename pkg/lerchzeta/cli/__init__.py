"""Command line interface for lerchzeta."""

from lerchzeta.cli.main import app

__all__ = ["app"]
