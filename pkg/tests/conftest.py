"""Shared fixtures: registry access, session-wide oracle caches, box scans."""

import itertools

import pytest

from k3picard import effective_oracle, pair
from k3picard.registry import REGISTRY

# filled by the acceptance module, echoed at the end of the run
CRITERION_LINES = []


def model(name):
    return REGISTRY[name]


def box_points(rank, radius):
    return itertools.product(range(-radius, radius + 1), repeat=rank)


def degree_box(m, radius, max_degree):
    """Box classes with |pairing against the polarization| capped."""
    for v in box_points(m.rank, radius):
        if abs(pair(m, v, m.H)) <= max_degree:
            yield v


class OracleStore:
    """One monoid cache per model, grown across tests within a session."""

    def __init__(self):
        self._caches = {}

    def query(self, m, v):
        got, self._caches[m.name] = effective_oracle(
            m, v, self._caches.get(m.name))
        return got


@pytest.fixture(scope="session")
def oracle_store():
    return OracleStore()


@pytest.fixture(params=sorted(REGISTRY))
def any_model(request):
    return REGISTRY[request.param]


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
