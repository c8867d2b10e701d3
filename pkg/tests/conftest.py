from fractions import Fraction

import pytest
from hypothesis import settings

from sl2n_howe.dualpair import build_dual_pair
from sl2n_howe.weylmodule import ModuleParams

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GENERIC = (Fraction(1, 2), Fraction(1, 3))
NONGENERIC = (Fraction(3, 2), Fraction(1, 2))


@pytest.fixture
def p2():
    return ModuleParams(2, *GENERIC)


@pytest.fixture
def p3():
    return ModuleParams(3, *GENERIC)


@pytest.fixture(scope="session")
def gens_cache():
    cache = {}

    def get(params):
        if params.n not in cache:
            cache[params.n] = build_dual_pair(params)
        return cache[params.n]

    return get


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: s.split("criterion")[1]):
            terminalreporter.write_line(line)
