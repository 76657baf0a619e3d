"""Sink setup for command-line use; the library itself stays silent."""

from __future__ import annotations

import sys

from loguru import logger


def configure_logging(verbose: bool = False) -> None:
    logger.remove()
    logger.add(
        sys.stderr,
        level="DEBUG" if verbose else "WARNING",
        format="<level>{level: <8}</level> {name}:{function} - {message}",
    )
    logger.enable("bipglue")
