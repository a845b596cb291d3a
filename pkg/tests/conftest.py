import sys
from pathlib import Path

import pytest

from incore.formal import parse_system

DATA = Path(__file__).parent / "data"


@pytest.fixture
def ex1():
    return parse_system((DATA / "ex1.sys").read_text())


@pytest.fixture
def ex1_path():
    return DATA / "ex1.sys"


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
