import sys
from pathlib import Path

import pytest

from aacc import Code

sys.path.insert(0, str(Path(__file__).parent))

# (4, 5, 2) worked-example code
EX_ROWS = [
    [0, 0, 0, 1, 0],
    [1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0],
]
# outer (2, 6, 3) and inner (2, 3, 2) codes of the concatenation example
B_ROWS = [
    [0, 0, 1, 1, 2, 2],
    [0, 1, 1, 2, 2, 0],
]
D_ROWS = [
    [0, 1, 0],
    [0, 0, 1],
]
C_ROWS = [
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 1, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0],
]


@pytest.fixture
def ex_code():
    return Code.from_rows(EX_ROWS, 2)


@pytest.fixture
def outer_b():
    return Code.from_rows(B_ROWS, 3)


@pytest.fixture
def inner_d():
    return Code.from_rows(D_ROWS, 2)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
