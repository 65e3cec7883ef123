import pytest
from hypothesis import HealthCheck, settings

from tutteconv import corpus as cp
from tutteconv import matroid as mt

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def k4():
    return cp.complete_graph(4)


@pytest.fixture(scope="session")
def u24():
    return mt.uniform(2, 4)


@pytest.fixture(scope="session")
def corpus():
    return cp.acceptance_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [(name, M) for name, M in corpus if M.n <= 7]


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
