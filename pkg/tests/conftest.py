import pytest
from hypothesis import HealthCheck, settings

from helpers import make_pair_graph, make_triple_graph
from mincostid import _kernel

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def pair_graph():
    return make_pair_graph()


@pytest.fixture
def triple_graph():
    return make_triple_graph()


@pytest.fixture(params=sorted(_kernel.BACKENDS))
def backend(request):
    old = _kernel.backend()
    _kernel.set_backend(request.param)
    yield request.param
    _kernel.set_backend(old)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.VERDICTS, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
