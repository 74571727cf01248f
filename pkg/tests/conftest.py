from __future__ import annotations

import pytest

from minksum.family import SimplexFamily
from minksum.master import build_master

_SCOREBOARD: list[str] = []


@pytest.fixture
def rhombus():
    return SimplexFamily.of([[1, 2], [2, 3]])


@pytest.fixture
def worked():
    return SimplexFamily.of([[1, 2, 3], [1, 2, 4]])


@pytest.fixture(scope="session")
def h3():
    return build_master(3, "paper3")


@pytest.fixture(scope="session")
def scoreboard():
    return _SCOREBOARD


def pytest_terminal_summary(terminalreporter):
    if _SCOREBOARD:
        terminalreporter.section("acceptance criteria")
        for line in _SCOREBOARD:
            terminalreporter.write_line(line)
