import pytest

from hoffmanzeta import ConstantCache, make_context

ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def ctx():
    return make_context(50, 10)


@pytest.fixture(scope="session")
def cache(ctx):
    return ConstantCache(ctx)


@pytest.fixture(scope="session")
def ctx20():
    return make_context(20, 10)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
