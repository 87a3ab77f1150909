import json
from pathlib import Path

import numpy as np
import pytest

from helpers import matrix_doc

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def fixture_dir():
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def write_matrix_file(tmp_path):
    def _write(name, a):
        path = tmp_path / name
        path.write_text(json.dumps(matrix_doc(a)))
        return path

    return _write


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
