import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dimfermat.arrangements import diminished_set, generators_Z  # noqa: E402
from dimfermat.cyclotomic import ambient_field  # noqa: E402


@pytest.fixture(scope="session")
def Z3():
    return diminished_set(3)


@pytest.fixture(scope="session")
def F6():
    return ambient_field(3)


@pytest.fixture(scope="session")
def h3(F6):
    return generators_Z(3, F6)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
