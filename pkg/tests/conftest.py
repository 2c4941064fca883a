import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

import pytest

DATA = pathlib.Path(__file__).resolve().parent.parent / "src" / "scythe" / "data"

# one line per acceptance criterion, printed after the test summary
ACCEPTANCE_LINES = []


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
