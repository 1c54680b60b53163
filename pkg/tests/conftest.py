import pytest
from hypothesis import HealthCheck, settings

from thompsonf.services import thompson

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def f0():
    return thompson.standard_generators()[0]


@pytest.fixture(scope="session")
def f1():
    return thompson.standard_generators()[1]


@pytest.fixture(scope="session")
def g0():
    return thompson.g0_g1()[0]


@pytest.fixture(scope="session")
def g1():
    return thompson.g0_g1()[1]


@pytest.fixture(scope="session")
def env():
    return thompson.standard_environment()
