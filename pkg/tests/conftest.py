from itertools import permutations

import pytest
from hypothesis import strategies as st

from boxball.core import Permutation


def perms(n):
    return [Permutation(w) for w in permutations(range(1, n + 1))]


def all_perms_upto(n):
    return [w for m in range(1, n + 1) for w in perms(m)]


@st.composite
def permutations_st(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@pytest.fixture(scope="session")
def s7():
    return perms(7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
