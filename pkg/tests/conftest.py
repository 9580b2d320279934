"""Shared fixtures: the golden two-node problem and its closed forms."""

import numpy as np
import pytest

from schurinterp import golden, interp


@pytest.fixture(scope="session")
def golden_problem():
    return golden.golden_problem()


@pytest.fixture(scope="session")
def golden_ps(golden_problem):
    return interp.pick_system(golden_problem)


@pytest.fixture(scope="session")
def golden_theta(golden_ps):
    return interp.build_theta(golden_ps)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
