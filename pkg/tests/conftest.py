import pytest

from triv9 import e8


@pytest.fixture(scope="session")
def alg():
    _, algebra = e8.build()
    return algebra


@pytest.fixture(scope="session")
def rootsystem():
    rs, _ = e8.build()
    return rs


@pytest.fixture(scope="session")
def cartan_data():
    from triv9.cartan import build_cartan

    return build_cartan()


@pytest.fixture(scope="session")
def weyl():
    from triv9.cartan import weyl_group

    return weyl_group()
