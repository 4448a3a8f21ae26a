import pytest
from hypothesis import strategies as st

from treelike.insertion import decode
from treelike.tableau import Tableau


@st.composite
def codes(draw, min_size=1, max_size=9):
    n = draw(st.integers(min_size, max_size))
    return tuple(draw(st.integers(1, k)) for k in range(2, n + 1))


@st.composite
def tableaux(draw, min_size=1, max_size=9):
    return decode(draw(codes(min_size, max_size)))[0]


@pytest.fixture
def worked_tableau() -> Tableau:
    # the tableau with full code 1,1,3,2,2,1,4
    return Tableau((4, 4, 3, 2), ((0, 0), (0, 3), (1, 0), (1, 1), (2, 1), (2, 2), (3, 0)))


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
