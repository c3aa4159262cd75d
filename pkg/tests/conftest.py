import pytest

from polysigma import build_partition_table, build_sigma_table

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)


@pytest.fixture(scope="session")
def sigma_table_10k():
    return build_sigma_table(10_000)


@pytest.fixture(scope="session")
def sigma_table_small():
    return build_sigma_table(500)


@pytest.fixture(scope="session")
def partition_table_small():
    return build_partition_table(500)
