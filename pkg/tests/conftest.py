import pytest
from hypothesis import settings

from planar_arcs import fixtures as fx
from planar_arcs.gf import GF

# property tests are reproducible: hypothesis derandomised, numpy seeded per test
settings.register_profile("repro", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("repro")

DEFAULT_SEED = 20260101


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomised property suites")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture(scope="session")
def arc12():
    return fx.arc12()


@pytest.fixture(scope="session")
def arc10():
    return fx.arc10()


@pytest.fixture(scope="session")
def arc24():
    return fx.arc24()


@pytest.fixture(scope="session")
def arc14():
    return fx.arc14()


@pytest.fixture(scope="session")
def gf9():
    return GF(3, 2)


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log
    if acceptance_log.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.lines():
            terminalreporter.write_line(line)
