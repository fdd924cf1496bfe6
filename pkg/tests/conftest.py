import pytest

from chacon.words import ChaconHierarchy

_acceptance: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def hierarchy():
    return ChaconHierarchy(15)


@pytest.fixture(scope="session")
def small_hierarchy():
    return ChaconHierarchy(8)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
