import pytest
from hypothesis import HealthCheck, settings

from tridom.generators import case_fixtures, family_f_landings, mop_from_triangulation, wheel

settings.register_profile(
    "tridom",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile(
    "thorough",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("tridom")


@pytest.fixture
def k4():
    return wheel(3)


@pytest.fixture
def w4():
    return wheel(4)


@pytest.fixture
def fan5():
    return mop_from_triangulation(5, [(0, 1, 2), (0, 2, 3), (0, 3, 4)])


@pytest.fixture
def fan9():
    return mop_from_triangulation(9, [(0, i, i + 1) for i in range(1, 8)])


@pytest.fixture(scope="session")
def fixtures():
    return case_fixtures()


@pytest.fixture(scope="session")
def landings():
    return family_f_landings()
