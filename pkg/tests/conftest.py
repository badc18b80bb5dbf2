from functools import lru_cache

import pytest
from hypothesis import strategies as st

from toricgb.semigroup import validate_input
from toricgb.verify import enumerate_sequences


@lru_cache(maxsize=None)
def _pool(max_m, max_n):
    return tuple(enumerate_sequences(max_m, max_n))


def almost_arithmetic(max_n=5, max_m=40):
    """Valid sequences drawn from the exhaustive enumeration, not by rejection."""
    return st.sampled_from(_pool(max_m, max_n))


def brute_member(gamma, gens):
    """Plain set-based closure, independent of the bytearray table."""
    reach = {0}
    for x in range(1, gamma + 1):
        if any(x - g in reach for g in gens if g <= x):
            reach.add(x)
    return gamma in reach


@pytest.fixture
def seq5():
    return validate_input((5, 6, 7, 8, 9))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
