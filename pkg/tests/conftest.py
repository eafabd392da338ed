import pytest

from dpflex import scenarios as sc
from dpflex.lattice import Surface


@pytest.fixture(scope="session")
def s5():
    return Surface(5)


@pytest.fixture(scope="session")
def s4():
    return Surface(4)


@pytest.fixture(scope="session")
def flex():
    return sc.flexibility_cone_deg4()


ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
