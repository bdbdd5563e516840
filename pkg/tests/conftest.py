from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from complab.core import Composition

BFILES = Path(__file__).parent / "data" / "bfiles"


def brute_compositions(n):
    """All compositions of n from the cut-point subsets of {1, ..., n-1}; shares nothing with complab.generate."""
    if n == 0:
        return [()]
    out = []
    for r in range(n):
        for cuts in combinations(range(1, n), r):
            bounds = (0,) + cuts + (n,)
            out.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return out


def C(text):
    """Compact test literal: C('2121') or C('6,2,4,3,3')."""
    from complab.core import parse_composition

    return parse_composition(text)


parts_lists = st.lists(st.integers(min_value=1, max_value=9), max_size=10)
compositions_st = parts_lists.map(lambda ps: Composition(tuple(ps)))


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
