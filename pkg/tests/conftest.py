import pytest

from suzuki import make_ring

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def F2():
    return make_ring("gf2m", 1)


@pytest.fixture(scope="session")
def F8():
    return make_ring("gf2m", 3)


@pytest.fixture(scope="session")
def F32():
    return make_ring("gf2m", 5)


@pytest.fixture(scope="session")
def D8():
    return make_ring("dual", 3)


@pytest.fixture(params=[("gf2m", 1), ("gf2m", 3), ("gf2m", 5), ("dual", 3)], ids=["F2", "F8", "F32", "D8"])
def any_ring(request):
    return make_ring(*request.param)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
