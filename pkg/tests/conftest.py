import pytest

from superbbw import root_datum


@pytest.fixture(scope="session")
def q2():
    return root_datum("q", 2)


@pytest.fixture(scope="session")
def q3():
    return root_datum("q", 3)


@pytest.fixture(scope="session")
def gl2():
    return root_datum("glnn", 2)


_LOG = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LOG] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[_LOG]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LOG, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line[1])
