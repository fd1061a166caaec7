import sys

import pytest

from deligne import catalog
from deligne.skeleton import build_skeleton


@pytest.fixture(scope="session")
def ex8():
    return catalog.get("EX8")


@pytest.fixture(scope="session")
def ex8_sk(ex8):
    return build_skeleton(ex8, "++++", {(1, 0): 1, (0, 1): 2})


@pytest.fixture(scope="session")
def skeletons():
    return {name: build_skeleton(catalog.get(name)) for name in ("EX8", "A2", "B2", "G2", "A3")}



def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
