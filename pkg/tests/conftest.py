from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from corebp import AnalysisModel, parse_model

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def m1_model() -> AnalysisModel:
    return parse_model(DATA_DIR / "m1.json")


def run_cli(*args: str) -> subprocess.CompletedProcess:
    """Run the CLI in a fresh interpreter, capturing raw bytes."""
    return subprocess.run(
        [sys.executable, "-m", "corebp", *args],
        capture_output=True,
        timeout=60,
    )
