import pytest

from matroidalkit import MonomialIdeal, make_ideal, transversal

# criterion results registered by tests/test_acceptance.py, printed at the end
# of the run so every criterion gets exactly one visible pass/fail line
ACCEPTANCE_LINES = []


def record_criterion(number, passed, detail):
    ACCEPTANCE_LINES.append((number, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_LINES):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number}: {detail}")


@pytest.fixture
def two_blocks_n4():
    return transversal(4, [{1, 2}, {3, 4}])


@pytest.fixture
def two_blocks_n5():
    return transversal(5, [{1, 2}, {3, 4, 5}])


@pytest.fixture
def squared_pivot_n3():
    # non-squarefree single-degree-3 ideal (x1^2*x2, x1^2*x3)
    return make_ideal(3, [(2, 1, 0), (2, 0, 1)])


@pytest.fixture
def path_n4():
    return make_ideal(4, [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)])
