"""Root on sys.path, and the bipglue logger silenced again after every test."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest
from loguru import logger

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))


@pytest.fixture(autouse=True)
def quiet_logger():
    yield
    # the CLI installs its own stderr sink
    logger.remove()
    logger.disable("bipglue")
