from __future__ import annotations

import pytest

from kideal.ideals import IdealSet
from kideal.semiring import corpus


@pytest.fixture(scope="session")
def rings():
    return {R.name: R for R in corpus()}


def ideal(R, *names):
    return IdealSet.of(R, names)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
