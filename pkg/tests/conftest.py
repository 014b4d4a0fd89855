import math

import pytest

from pseudobosons import GbtParams, build_family, constrained_family, swanson


@pytest.fixture
def case_d():
    # scenario D with nonzero anomaly -1/6
    return GbtParams(alpha=2 / 3, beta=2.0, gamma=1.0, delta=1.5)


@pytest.fixture
def scenario_a():
    return GbtParams(alpha=1.0, beta=2.0, gamma=1.0, delta=1.0)


@pytest.fixture
def scenario_b():
    return GbtParams(alpha=1.0, beta=1.0, gamma=2.0, delta=1.0)


@pytest.fixture
def scenario_c():
    return GbtParams(alpha=-1.5, beta=0.25, gamma=1.0, delta=0.5)


@pytest.fixture
def constrained_21():
    return constrained_family(2.0, 1.0)


@pytest.fixture
def constrained_12():
    return constrained_family(1.2, 1.0)


@pytest.fixture
def constrained_sqrt2():
    return constrained_family(math.sqrt(2.0), 1.0)


@pytest.fixture
def swanson_03():
    return swanson(0.3)


@pytest.fixture(scope="session")
def family_d_60():
    return build_family(GbtParams(2 / 3, 2.0, 1.0, 1.5), 60)


@pytest.fixture(scope="session")
def family_sw_40():
    return build_family(swanson(0.3), 40)
