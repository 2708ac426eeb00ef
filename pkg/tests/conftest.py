from __future__ import annotations

import pytest

import crossband as cb


@pytest.fixture(scope="session")
def grid():
    return cb.AngularGrid(step_deg=1.0)


@pytest.fixture(scope="session")
def gpp3_10():
    return cb.synth_3gpp(hpbw_deg=10.0, a_max_db=30.0)


@pytest.fixture(scope="session")
def ula4():
    return cb.synth_ula(n_elements=4)


@pytest.fixture(scope="session")
def ula8():
    return cb.synth_ula(n_elements=8)
