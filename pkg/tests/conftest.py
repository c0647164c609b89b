import pytest
from hypothesis import HealthCheck, settings

import helpers
from helpers import E1_TEXT, E2_TEXT, mk


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if helpers.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def e1():
    return mk(E1_TEXT)


@pytest.fixture(scope="session")
def e2():
    return mk(E2_TEXT)
