import pytest

from zmgroups.core import validate_triple
from zmgroups.scan import iter_triples

F21 = (7, 3, 2)
F20 = (5, 4, 2)


@pytest.fixture
def f21():
    return validate_triple(*F21)


@pytest.fixture
def f20():
    return validate_triple(*F20)


def triples_upto(bound):
    return list(iter_triples(bound))


SMALL = triples_upto(60)


# criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, desc = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {desc}")
