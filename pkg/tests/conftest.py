import pytest

from natfromint.harness import numeral
from natfromint.kernel import counters_reset


@pytest.fixture
def n():
    """Shorthand: ``n(k)`` is the OpaqueInt for ``k``."""
    return numeral


@pytest.fixture
def fresh_counters():
    counters_reset()
    yield


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", None)
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
