import pytest
from hypothesis import HealthCheck, settings

from richlang.enumerate import count_rich

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def table2():
    return count_rich(2, 16, "reduced", workers=1)


@pytest.fixture(scope="session")
def table3():
    return count_rich(3, 16, "reduced", workers=1)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
