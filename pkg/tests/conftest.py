import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from relspin.kinematics import DimensionlessMomentum, DimensionlessVelocity


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


def velocities(max_norm=0.99):
    """Hypothesis strategy for velocities inside a ball of radius ``max_norm``."""
    comp = st.floats(-max_norm, max_norm, allow_nan=False)
    return (
        st.tuples(comp, comp, comp)
        .filter(lambda v: sum(x * x for x in v) <= max_norm**2)
        .map(DimensionlessVelocity.of)
    )


def momenta(bound=10.0):
    comp = st.floats(-bound, bound, allow_nan=False)
    return st.tuples(comp, comp, comp).map(DimensionlessMomentum.of)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
