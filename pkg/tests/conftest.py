import random
from fractions import Fraction

import pytest

from charform.poly import PaperRootTuple

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rand_rational(rng, num=20, den=10, nonzero=False):
    while True:
        v = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if v or not nonzero:
            return v


def rand_tuple(rng, n, leading=None):
    lead = rand_rational(rng, nonzero=True) if leading is None else leading
    return PaperRootTuple([rand_rational(rng) for _ in range(n)], lead)


@pytest.fixture
def rng():
    return random.Random(20261016)
