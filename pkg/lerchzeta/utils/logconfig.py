"""Logging setup for the command line front end."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_CONFIGURED = False


def configure_logging(verbose: bool = False) -> None:
    """Route lerchzeta log records through a rich handler on stderr.

    Args:
        verbose: Emit DEBUG records (parameter and contour choices) when True
    """
    global _CONFIGURED
    level = logging.DEBUG if verbose else logging.WARNING
    logger = logging.getLogger("lerchzeta")
    logger.setLevel(level)
    if not _CONFIGURED:
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
        _CONFIGURED = True
