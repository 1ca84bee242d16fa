from functools import lru_cache

import pytest

from afk.natmod import build_natural
from afk.rootdata import make_cartan

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def natural(family: str, rank: int):
    return build_natural(make_cartan(family, rank))


@pytest.fixture
def nat():
    return natural


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
