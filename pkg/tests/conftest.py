import pytest
from hypothesis import settings

from cispectra import parse_polynomial

import helpers

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def e2():
    return parse_polynomial(helpers.E2_POLY, 3, 4)


@pytest.fixture(scope="session")
def e2e3():
    return parse_polynomial(helpers.E2_E3_POLY, 3, 4)
