import itertools
import math

import pytest

from dmimo_capacity import ChannelSpec, LinkBudget, applicable_schemes, evaluate_scheme
from dmimo_capacity.cli import figure2_rows

# shared evaluation grid: every scheme gets checked on all of it
GRID_ALPHA2 = (0.0, 0.3, 0.6, 0.9)
GRID_P = (0.1, 1.0, 10.0, 100.0, 1000.0)
GRID_CAP = (1.0, 2.0, 4.0, 8.0, math.inf)


@pytest.fixture(scope="session")
def grid_table():
    """Every applicable scheme at every grid point, keyed by
    (alpha2, p, c, cprime, scheme). Built once; several suites read it."""
    table = {}
    for a2 in GRID_ALPHA2:
        spec = ChannelSpec.from_alpha_squared(a2)
        for p, c, cp in itertools.product(GRID_P, GRID_CAP, GRID_CAP):
            budget = LinkBudget(p, c, cp)
            for s in applicable_schemes(budget):
                table[(a2, p, c, cp, s)] = evaluate_scheme(s, spec, budget)
    return table


@pytest.fixture(scope="session")
def fig2_rows():
    return figure2_rows()
