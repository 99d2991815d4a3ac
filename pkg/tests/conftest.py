import random
import sys

import pytest

from hyclif.multivector import AlgebraContext


@pytest.fixture(scope="session")
def ctx1():
    return AlgebraContext(1)


@pytest.fixture(scope="session")
def ctx2():
    return AlgebraContext(2)


@pytest.fixture(scope="session")
def ctx3():
    return AlgebraContext(3)


@pytest.fixture
def rng():
    return random.Random(20240917)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("tests.test_acceptance") or sys.modules.get("test_acceptance")
    if acceptance is None or not getattr(acceptance, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(acceptance.RESULTS):
        terminalreporter.write_line(line)
