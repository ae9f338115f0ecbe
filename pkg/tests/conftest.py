import os

import pytest

from posetramsey.lattice import mask_of


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run the long-running extended acceptance tier")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended") or os.environ.get("POSET_RAMSEY_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended tier: pass --extended or set POSET_RAMSEY_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def S(*one_based):
    """Vertex mask from 1-based element names, matching how sets are written in prose."""
    return mask_of(i - 1 for i in one_based)


@pytest.fixture
def sset():
    return S


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
