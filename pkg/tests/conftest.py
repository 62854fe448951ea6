import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from invcat.esn import g_of_inverse_category  # noqa: E402
from invcat.generators import partial_bijection_category, symmetric_inverse_monoid  # noqa: E402

SWAP = "[1:2,2:1]"
ID12 = "[1:1,2:2]"
ID1 = "[1:1]"
ID2 = "[2:2]"
EMPTY = "[]"
ONE_TO_TWO = "[1:2]"
TWO_TO_ONE = "[2:1]"


@pytest.fixture(scope="session")
def I1():
    return symmetric_inverse_monoid(1)


@pytest.fixture(scope="session")
def I2():
    return symmetric_inverse_monoid(2)


@pytest.fixture(scope="session")
def I3():
    return symmetric_inverse_monoid(3)


@pytest.fixture(scope="session")
def I4():
    return symmetric_inverse_monoid(4)


@pytest.fixture(scope="session")
def PB12():
    return partial_bijection_category([[1], [1, 2]])


@pytest.fixture(scope="session")
def GI1(I1):
    return g_of_inverse_category(I1)


@pytest.fixture(scope="session")
def GI2(I2):
    return g_of_inverse_category(I2)


@pytest.fixture(scope="session")
def GI3(I3):
    return g_of_inverse_category(I3)


# acceptance criteria record one line each here; printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
